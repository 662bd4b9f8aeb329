//! Immutable undirected graph: an edge list (the sweep order) plus a CSR
//! adjacency built from it.

use crate::error::{Error, Result};

/// Dense vertex identifier in `0..n`.
pub type VertexId = u32;

/// An undirected edge `(u, v)`.
pub type Edge = (VertexId, VertexId);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    offsets: Vec<usize>,
    neighbors: Vec<VertexId>,
    id_map: Option<Vec<u64>>,
}

impl Graph {
    /// Builds a graph over `n` vertices. Edges are kept in the given order
    /// and orientation; every endpoint must be `< n`.
    pub fn from_edges(n: usize, edges: Vec<Edge>) -> Result<Self> {
        if n > VertexId::MAX as usize {
            return Err(Error::param(format!("{n} vertices exceeds the 32-bit id space")));
        }
        if let Some(&(u, v)) = edges
            .iter()
            .find(|&&(u, v)| u as usize >= n || v as usize >= n)
        {
            return Err(Error::param(format!(
                "edge ({u}, {v}) has an endpoint outside 0..{n}"
            )));
        }

        let mut degree = vec![0usize; n + 1];
        for &(u, v) in &edges {
            degree[u as usize + 1] += 1;
            degree[v as usize + 1] += 1;
        }
        for i in 0..n {
            degree[i + 1] += degree[i];
        }
        let offsets = degree;
        let mut cursor = offsets.clone();
        let mut neighbors = vec![0; offsets[n]];
        for &(u, v) in &edges {
            neighbors[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            neighbors[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }

        Ok(Graph {
            n,
            edges,
            offsets,
            neighbors,
            id_map: None,
        })
    }

    /// Attaches a dense → original ID mapping. Its length must equal `n`.
    pub fn with_id_map(mut self, id_map: Vec<u64>) -> Result<Self> {
        if id_map.len() != self.n {
            return Err(Error::param(format!(
                "id map has {} entries for {} vertices",
                id_map.len(),
                self.n
            )));
        }
        self.id_map = Some(id_map);
        Ok(self)
    }

    pub fn empty() -> Self {
        Graph::from_edges(0, Vec::new()).expect("empty graph is valid")
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn csr_offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn csr_neighbors(&self) -> &[VertexId] {
        &self.neighbors
    }

    pub fn id_map(&self) -> Option<&[u64]> {
        self.id_map.as_deref()
    }

    /// External ID of a dense vertex (identity when no map is attached).
    pub fn original_id(&self, v: VertexId) -> u64 {
        match &self.id_map {
            Some(map) => map[v as usize],
            None => v as u64,
        }
    }

    /// Relabels every vertex `u` as `perm[u]`. Edge order and orientation
    /// are preserved; the id map, if any, follows the vertices.
    pub fn permute_vertices(&self, perm: &[VertexId]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::param(format!(
                "permutation has {} entries for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            let p = p as usize;
            if p >= self.n || seen[p] {
                return Err(Error::param("permutation is not a bijection on 0..n"));
            }
            seen[p] = true;
        }

        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u as usize], perm[v as usize]))
            .collect();
        let graph = Graph::from_edges(self.n, edges)?;
        match &self.id_map {
            Some(map) => {
                let mut permuted = vec![0; self.n];
                for (old, &new) in perm.iter().enumerate() {
                    permuted[new as usize] = map[old];
                }
                graph.with_id_map(permuted)
            }
            None => Ok(graph),
        }
    }
}
