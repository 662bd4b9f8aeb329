//! Exact component sizes and diameters by per-vertex BFS. O(n·m); meant
//! for desk-scale graphs.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::graph::{Graph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentMetrics {
    /// Smallest vertex ID in the component.
    pub min_vertex: VertexId,
    pub size: usize,
    pub diameter: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphMetrics {
    /// Components ordered by `min_vertex`.
    pub components: Vec<ComponentMetrics>,
    pub d_max: usize,
}

impl GraphMetrics {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }
}

const UNSEEN: u32 = u32::MAX;

/// BFS from `source`, returning the eccentricity. `dist` must be all
/// `UNSEEN` on entry and is restored before returning.
fn eccentricity(
    graph: &Graph,
    source: VertexId,
    dist: &mut [u32],
    queue: &mut VecDeque<VertexId>,
    touched: &mut Vec<VertexId>,
) -> usize {
    dist[source as usize] = 0;
    touched.push(source);
    queue.push_back(source);
    let mut far = 0;
    while let Some(u) = queue.pop_front() {
        let du = dist[u as usize];
        far = far.max(du);
        for &w in graph.neighbors(u) {
            if dist[w as usize] == UNSEEN {
                dist[w as usize] = du + 1;
                touched.push(w);
                queue.push_back(w);
            }
        }
    }
    for v in touched.drain(..) {
        dist[v as usize] = UNSEEN;
    }
    far as usize
}

pub fn exact_metrics(graph: &Graph) -> GraphMetrics {
    let n = graph.num_vertices();
    let mut component = vec![UNSEEN; n];
    let mut components = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n as VertexId {
        if component[s as usize] != UNSEEN {
            continue;
        }
        let id = components.len() as u32;
        component[s as usize] = id;
        queue.push_back(s);
        let mut size = 0;
        while let Some(u) = queue.pop_front() {
            size += 1;
            for &w in graph.neighbors(u) {
                if component[w as usize] == UNSEEN {
                    component[w as usize] = id;
                    queue.push_back(w);
                }
            }
        }
        components.push(ComponentMetrics {
            min_vertex: s,
            size,
            diameter: 0,
        });
    }

    let eccentricities: Vec<usize> = (0..n as VertexId)
        .into_par_iter()
        .map_init(
            || (vec![UNSEEN; n], VecDeque::new(), Vec::new()),
            |(dist, queue, touched), v| eccentricity(graph, v, dist, queue, touched),
        )
        .collect();
    for (v, ecc) in eccentricities.into_iter().enumerate() {
        let c = &mut components[component[v] as usize];
        c.diameter = c.diameter.max(ecc);
    }

    let d_max = components.iter().map(|c| c.diameter).max().unwrap_or(0);
    GraphMetrics { components, d_max }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GraphKind};

    /// Floyd–Warshall reference for tiny graphs.
    fn all_pairs_diameter(graph: &Graph) -> usize {
        let n = graph.num_vertices();
        let inf = usize::MAX / 2;
        let mut d = vec![vec![inf; n]; n];
        for (v, row) in d.iter_mut().enumerate() {
            row[v] = 0;
        }
        for &(u, v) in graph.edges() {
            let (u, v) = (u as usize, v as usize);
            if u != v {
                d[u][v] = 1;
                d[v][u] = 1;
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if d[i][k] + d[k][j] < d[i][j] {
                        d[i][j] = d[i][k] + d[k][j];
                    }
                }
            }
        }
        d.iter()
            .flat_map(|row| row.iter().copied().filter(|&x| x < inf))
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn examples() {
        let m = exact_metrics(&generate(&GraphKind::Path { n: 5 }, 0).unwrap());
        assert_eq!(m.component_count(), 1);
        assert_eq!(m.components[0].diameter, 4);

        let g = Graph::from_edges(4, vec![(0, 1), (2, 3)]).unwrap();
        let m = exact_metrics(&g);
        assert_eq!(m.component_count(), 2);
        assert_eq!(m.d_max, 1);

        let cycle = generate(&GraphKind::Cycle { n: 6 }, 0).unwrap();
        assert_eq!(all_pairs_diameter(&cycle), 3);
        assert_eq!(exact_metrics(&cycle).d_max, 3);
    }

    #[test]
    fn empty_and_singletons() {
        assert_eq!(exact_metrics(&Graph::empty()).component_count(), 0);
        let g = Graph::from_edges(3, vec![(1, 1)]).unwrap();
        let m = exact_metrics(&g);
        assert_eq!(m.component_count(), 3);
        assert!(m.components.iter().all(|c| c.diameter == 0 && c.size == 1));
    }

    #[test]
    fn matches_all_pairs_on_random_graphs() {
        for seed in 0..20 {
            let g = generate(&GraphKind::ErdosRenyi { n: 30, p: 0.08 }, seed).unwrap();
            assert_eq!(exact_metrics(&g).d_max, all_pairs_diameter(&g), "seed {seed}");
        }
    }
}
