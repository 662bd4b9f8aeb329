use std::collections::BTreeMap;

use crate::contour::LabelArray;
use crate::error::{Error, Result};
use crate::graph::VertexId;

/// Component count, representatives and sizes of a normalized labelling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSummary {
    /// Representative (minimum vertex) → component size.
    pub sizes: BTreeMap<VertexId, usize>,
}

impl ComponentSummary {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    pub fn representatives(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.sizes.keys().copied()
    }
}

/// Relabels every vertex with the smallest vertex ID among those whose
/// pointer chain ends at the same fixed point.
pub fn normalize_labels(raw: &[VertexId]) -> Result<LabelArray> {
    let n = raw.len();
    if let Some(v) = raw.iter().position(|&r| r as usize >= n) {
        return Err(Error::param(format!("representative {} of vertex {v} is out of range", raw[v])));
    }
    let mut root = vec![VertexId::MAX; n];
    let mut path = Vec::new();
    for start in 0..n {
        let mut v = start;
        while root[v] == VertexId::MAX {
            if raw[v] as usize == v {
                root[v] = v as VertexId;
                break;
            }
            path.push(v);
            if path.len() > n {
                return Err(Error::param(format!(
                    "representative chain from vertex {start} never reaches a fixed point"
                )));
            }
            v = raw[v] as usize;
        }
        let r = root[v];
        for u in path.drain(..) {
            root[u] = r;
        }
    }

    // vertices are visited in ascending order, so the first one seen for a
    // root is the class minimum
    let mut minimum = vec![VertexId::MAX; n];
    for (v, &r) in root.iter().enumerate() {
        let r = r as usize;
        if minimum[r] == VertexId::MAX {
            minimum[r] = v as VertexId;
        }
    }
    Ok(root.iter().map(|&r| minimum[r as usize]).collect::<Vec<_>>().into())
}

/// Groups a normalized labelling (`labels[v]` is the class minimum).
pub fn summarize(labels: &[VertexId]) -> ComponentSummary {
    let mut sizes = BTreeMap::new();
    for &l in labels {
        *sizes.entry(l).or_insert(0) += 1;
    }
    ComponentSummary { sizes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_labels(&[1, 1, 3, 3]).unwrap().as_slice(), [0, 0, 2, 2]);
        assert_eq!(normalize_labels(&[0, 0, 0]).unwrap().as_slice(), [0, 0, 0]);
        assert_eq!(normalize_labels(&[2, 2, 2]).unwrap().as_slice(), [0, 0, 0]);
        assert!(normalize_labels(&[]).unwrap().is_empty());
    }

    #[test]
    fn normalize_follows_chains() {
        // 0 -> 3 -> 3, 1 -> 2 -> 2
        assert_eq!(normalize_labels(&[3, 2, 2, 3]).unwrap().as_slice(), [0, 1, 1, 0]);
    }

    #[test]
    fn normalize_rejects_cycles() {
        assert!(matches!(normalize_labels(&[1, 2, 0]), Err(Error::Parameter(_))));
        assert!(matches!(normalize_labels(&[0, 7]), Err(Error::Parameter(_))));
    }

    #[test]
    fn summarize_examples() {
        let s = summarize(&[0, 0, 2, 2]);
        assert_eq!(s.count(), 2);
        assert_eq!(s.sizes[&0], 2);
        assert_eq!(s.sizes[&2], 2);
        assert_eq!(summarize(&[0, 1, 2]).count(), 3);
        let s = summarize(&[0; 9]);
        assert_eq!((s.count(), s.sizes[&0]), (1, 9));
    }

    fn forest_labels() -> impl Strategy<Value = Vec<u32>> {
        (1usize..60).prop_flat_map(|n| {
            (0..n)
                .map(|v| (0..=v as u32).boxed())
                .collect::<Vec<_>>()
        })
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(raw in forest_labels()) {
            let once = normalize_labels(&raw).unwrap();
            let twice = normalize_labels(&once).unwrap();
            prop_assert_eq!(&once, &twice);
            prop_assert!(once.iter().enumerate().all(|(v, &l)| l as usize <= v));
            prop_assert_eq!(summarize(&once).sizes.values().sum::<usize>(), raw.len());
        }
    }
}
