//! Deterministic synthetic graph generators.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

/// Generator family plus its size parameters.
///
/// Edge orders: path emits `(i, i+1)` ascending, cycle appends `(0, n-1)`,
/// grid walks row-major emitting the right then the down neighbour, star
/// emits `(0, i)`, Erdős–Rényi emits pairs `(u, v)` with `u < v` ordered by
/// `v` then `u`, and forest emits `(parent, i)` for ascending `i`.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphKind {
    Path { n: usize },
    Cycle { n: usize },
    Grid2d { rows: usize, cols: usize },
    Star { n: usize },
    ErdosRenyi { n: usize, p: f64 },
    /// `trees` random recursive trees; vertex `i >= trees` attaches to a
    /// uniformly chosen earlier vertex.
    Forest { n: usize, trees: usize },
}

impl GraphKind {
    pub fn num_vertices(&self) -> usize {
        match *self {
            GraphKind::Path { n }
            | GraphKind::Cycle { n }
            | GraphKind::Star { n }
            | GraphKind::ErdosRenyi { n, .. }
            | GraphKind::Forest { n, .. } => n,
            GraphKind::Grid2d { rows, cols } => rows * cols,
        }
    }
}

pub fn generate(kind: &GraphKind, seed: u64) -> Result<Graph> {
    let n = kind.num_vertices();
    if n > VertexId::MAX as usize {
        return Err(Error::param(format!("{n} vertices exceeds the 32-bit id space")));
    }
    let edges = match *kind {
        GraphKind::Path { n } => (1..n as VertexId).map(|i| (i - 1, i)).collect(),
        GraphKind::Cycle { n } => {
            let mut edges: Vec<Edge> = (1..n as VertexId).map(|i| (i - 1, i)).collect();
            if n >= 3 {
                edges.push((0, n as VertexId - 1));
            }
            edges
        }
        GraphKind::Grid2d { rows, cols } => {
            if rows == 0 || cols == 0 {
                return Err(Error::param(format!("grid dimensions {rows}x{cols} must be positive")));
            }
            grid(rows, cols)
        }
        GraphKind::Star { n } => (1..n as VertexId).map(|i| (0, i)).collect(),
        GraphKind::ErdosRenyi { n, p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::param(format!("edge probability {p} outside [0, 1]")));
            }
            erdos_renyi(n, p, &mut ChaCha8Rng::seed_from_u64(seed))
        }
        GraphKind::Forest { n, trees } => {
            if n > 0 && (trees == 0 || trees > n) {
                return Err(Error::param(format!("forest of {n} vertices needs 1..={n} trees")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (trees..n)
                .map(|i| (rng.gen_range(0..i) as VertexId, i as VertexId))
                .collect()
        }
    };
    Graph::from_edges(n, edges)
}

fn grid(rows: usize, cols: usize) -> Vec<Edge> {
    let mut edges = Vec::with_capacity(2 * rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            let v = (r * cols + c) as VertexId;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols as VertexId));
            }
        }
    }
    edges
}

/// G(n, p) by geometric skipping over the lower triangle, O(n + m).
fn erdos_renyi(n: usize, p: f64, rng: &mut impl Rng) -> Vec<Edge> {
    if p <= 0.0 || n < 2 {
        return Vec::new();
    }
    if p >= 1.0 {
        return (1..n as VertexId)
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .collect();
    }
    let expected = (p * (n as f64) * (n as f64 - 1.0) / 2.0) as usize;
    let mut edges = Vec::with_capacity(expected + expected / 16 + 16);
    let log_q = (1.0 - p).ln();
    let (mut v, mut w) = (1usize, -1i64);
    while v < n {
        let r: f64 = rng.gen();
        w += 1 + ((1.0 - r).ln() / log_q).floor() as i64;
        while w >= v as i64 && v < n {
            w -= v as i64;
            v += 1;
        }
        if v < n {
            edges.push((w as VertexId, v as VertexId));
        }
    }
    edges
}

/// Uniform random permutation of `0..n`.
pub fn random_permutation(n: usize, seed: u64) -> Vec<VertexId> {
    use rand::seq::SliceRandom;
    let mut perm: Vec<VertexId> = (0..n as VertexId).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    perm
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKind::Path { n } => write!(f, "path:n={n}"),
            GraphKind::Cycle { n } => write!(f, "cycle:n={n}"),
            GraphKind::Grid2d { rows, cols } => write!(f, "grid2d:rows={rows}:cols={cols}"),
            GraphKind::Star { n } => write!(f, "star:n={n}"),
            GraphKind::ErdosRenyi { n, p } => write!(f, "er:n={n}:p={p}"),
            GraphKind::Forest { n, trees } => write!(f, "forest:n={n}:trees={trees}"),
        }
    }
}

/// Parses `kind:key=value:...`, e.g. `path:n=100` or `er:n=1000:p=0.01`.
impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(':');
        let kind = parts.next().unwrap_or_default();
        let mut n = None;
        let mut p = None;
        let mut rows = None;
        let mut cols = None;
        let mut trees = None;
        for part in parts {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::param(format!("expected key=value, got `{part}`")))?;
            let bad = || Error::param(format!("bad value `{value}` for `{key}`"));
            match key {
                "n" => n = Some(value.parse().map_err(|_| bad())?),
                "p" => p = Some(value.parse().map_err(|_| bad())?),
                "rows" => rows = Some(value.parse().map_err(|_| bad())?),
                "cols" => cols = Some(value.parse().map_err(|_| bad())?),
                "trees" => trees = Some(value.parse().map_err(|_| bad())?),
                _ => return Err(Error::param(format!("unknown generator key `{key}`"))),
            }
        }
        let need = |v: Option<usize>, key: &str| {
            v.ok_or_else(|| Error::param(format!("`{kind}` needs `{key}=`")))
        };
        Ok(match kind {
            "path" => GraphKind::Path { n: need(n, "n")? },
            "cycle" => GraphKind::Cycle { n: need(n, "n")? },
            "star" => GraphKind::Star { n: need(n, "n")? },
            "grid2d" | "grid" => GraphKind::Grid2d {
                rows: need(rows, "rows")?,
                cols: need(cols, "cols")?,
            },
            "er" | "erdos_renyi" => GraphKind::ErdosRenyi {
                n: need(n, "n")?,
                p: p.ok_or_else(|| Error::param("`er` needs `p=`"))?,
            },
            "forest" => GraphKind::Forest {
                n: need(n, "n")?,
                trees: trees.unwrap_or(1),
            },
            other => return Err(Error::param(format!("unknown generator `{other}`"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let g = generate(&GraphKind::Path { n: 4 }, 0).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3)]);

        let g = generate(&GraphKind::ErdosRenyi { n: 10, p: 0.0 }, 3).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (10, 0));

        let g = generate(&GraphKind::Cycle { n: 3 }, 0).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (0, 2)]);

        let g = generate(&GraphKind::Star { n: 4 }, 0).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (0, 3)]);

        let g = generate(&GraphKind::Grid2d { rows: 2, cols: 2 }, 0).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn invalid_parameters() {
        for kind in [
            GraphKind::ErdosRenyi { n: 5, p: 1.5 },
            GraphKind::ErdosRenyi { n: 5, p: -0.1 },
            GraphKind::ErdosRenyi { n: 5, p: f64::NAN },
            GraphKind::Grid2d { rows: 0, cols: 3 },
            GraphKind::Forest { n: 5, trees: 0 },
            GraphKind::Forest { n: 5, trees: 6 },
        ] {
            assert!(matches!(generate(&kind, 0), Err(Error::Parameter(_))), "{kind:?}");
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let kind = GraphKind::ErdosRenyi { n: 300, p: 0.05 };
        assert_eq!(generate(&kind, 9).unwrap(), generate(&kind, 9).unwrap());
        assert_ne!(generate(&kind, 9).unwrap(), generate(&kind, 10).unwrap());
    }

    #[test]
    fn erdos_renyi_complete_and_density() {
        let g = generate(&GraphKind::ErdosRenyi { n: 6, p: 1.0 }, 0).unwrap();
        assert_eq!(g.num_edges(), 15);

        let n = 2000;
        let p = 0.01;
        let g = generate(&GraphKind::ErdosRenyi { n, p }, 42).unwrap();
        let expected = p * (n * (n - 1) / 2) as f64;
        let sd = (expected * (1.0 - p)).sqrt();
        assert!((g.num_edges() as f64 - expected).abs() < 5.0 * sd);
        let mut sorted = g.edges().to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), g.num_edges());
        assert!(g.edges().iter().all(|&(u, v)| u < v));
    }

    #[test]
    fn forest_has_requested_tree_count() {
        let g = generate(&GraphKind::Forest { n: 100, trees: 7 }, 1).unwrap();
        assert_eq!(g.num_edges(), 93);
    }

    #[test]
    fn kind_round_trips_through_text() {
        for text in ["path:n=5", "grid2d:rows=2:cols=3", "er:n=10:p=0.25", "forest:n=9:trees=2"] {
            let kind: GraphKind = text.parse().unwrap();
            assert_eq!(kind.to_string(), text);
        }
        assert!("path".parse::<GraphKind>().is_err());
        assert!("blob:n=3".parse::<GraphKind>().is_err());
    }

    #[test]
    fn permutation_is_bijection() {
        let mut perm = random_permutation(50, 4);
        perm.sort_unstable();
        assert_eq!(perm, (0..50).collect::<Vec<_>>());
    }
}
