use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::VertexId;

/// Shape of the pointer graph `v -> labels[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestDiagnostics {
    /// Vertices with `labels[v] == v`, ascending.
    pub roots: Vec<VertexId>,
    /// Longest pointer chain ending at each root.
    pub heights: BTreeMap<VertexId, usize>,
    /// Number of vertices carrying each label value (one-order equal
    /// minimum sets).
    pub class_sizes: BTreeMap<VertexId, usize>,
}

impl ForestDiagnostics {
    /// Distinct label values still in use (one-order merged minimum set).
    pub fn merged_minimum_set_size(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn max_height(&self) -> usize {
        self.heights.values().copied().max().unwrap_or(0)
    }

    /// Every tree has height at most one.
    pub fn is_star_forest(&self) -> bool {
        self.max_height() <= 1
    }
}

pub fn forest_diagnostics(labels: &[VertexId]) -> Result<ForestDiagnostics> {
    let n = labels.len();
    if let Some(v) = labels.iter().position(|&l| l as usize >= n) {
        return Err(Error::Internal(format!(
            "label {} of vertex {v} is outside 0..{n}",
            labels[v]
        )));
    }

    const UNKNOWN: usize = usize::MAX;
    let mut depth = vec![UNKNOWN; n];
    let mut root_of = vec![0 as VertexId; n];
    let mut path = Vec::new();
    for start in 0..n {
        let mut v = start;
        while depth[v] == UNKNOWN {
            if labels[v] as usize == v {
                depth[v] = 0;
                root_of[v] = v as VertexId;
                break;
            }
            path.push(v);
            if path.len() > n {
                return Err(Error::Internal(format!(
                    "pointer cycle reached from vertex {start}"
                )));
            }
            v = labels[v] as usize;
        }
        let (mut d, root) = (depth[v], root_of[v]);
        while let Some(u) = path.pop() {
            d += 1;
            depth[u] = d;
            root_of[u] = root;
        }
    }

    let roots: Vec<VertexId> = (0..n as VertexId)
        .filter(|&v| labels[v as usize] == v)
        .collect();
    let mut heights: BTreeMap<VertexId, usize> = roots.iter().map(|&r| (r, 0)).collect();
    for v in 0..n {
        let h = heights.get_mut(&root_of[v]).expect("every root is registered");
        *h = (*h).max(depth[v]);
    }
    let mut class_sizes = BTreeMap::new();
    for &l in labels {
        *class_sizes.entry(l).or_insert(0) += 1;
    }

    Ok(ForestDiagnostics {
        roots,
        heights,
        class_sizes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain() {
        let d = forest_diagnostics(&[0, 0, 1, 2]).unwrap();
        assert_eq!(d.roots, [0]);
        assert_eq!(d.heights[&0], 3);
        assert!(!d.is_star_forest());
    }

    #[test]
    fn all_roots() {
        let d = forest_diagnostics(&[0, 1, 2]).unwrap();
        assert_eq!(d.roots, [0, 1, 2]);
        assert!(d.heights.values().all(|&h| h == 0));
        assert_eq!(d.merged_minimum_set_size(), 3);
    }

    #[test]
    fn class_sizes() {
        let d = forest_diagnostics(&[0, 0, 0, 1]).unwrap();
        assert_eq!(d.roots, [0]);
        assert_eq!(d.heights[&0], 2);
        assert_eq!(d.class_sizes[&0], 3);
        assert_eq!(d.class_sizes[&1], 1);
        assert_eq!(d.class_sizes.values().sum::<usize>(), 4);
        assert_eq!(d.merged_minimum_set_size(), 2);
    }

    #[test]
    fn star_forest() {
        let d = forest_diagnostics(&[0, 0, 2, 2, 0]).unwrap();
        assert_eq!(d.roots, [0, 2]);
        assert!(d.is_star_forest());
    }

    #[test]
    fn cycles_and_bad_labels_are_errors() {
        assert!(matches!(forest_diagnostics(&[1, 0]), Err(Error::Internal(_))));
        assert!(matches!(forest_diagnostics(&[0, 2, 3, 1]), Err(Error::Internal(_))));
        assert!(matches!(forest_diagnostics(&[0, 5]), Err(Error::Internal(_))));
        assert!(forest_diagnostics(&[]).unwrap().roots.is_empty());
    }
}
