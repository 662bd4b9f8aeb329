use super::labels::normalize_labels;
use crate::contour::LabelArray;
use crate::graph::{Graph, VertexId};

/// Rem's union with splicing: walk both parent chains upward in lockstep,
/// always advancing the side whose parent is larger and re-pointing it at
/// the other side's parent. Parents only ever decrease, so `parent[v] <= v`.
fn unite(parent: &mut [VertexId], x: VertexId, y: VertexId) {
    let (mut a, mut b) = (x as usize, y as usize);
    while parent[a] != parent[b] {
        if parent[a] < parent[b] {
            std::mem::swap(&mut a, &mut b);
        }
        let up = parent[a] as usize;
        if up == a {
            parent[a] = parent[b];
            return;
        }
        parent[a] = parent[b];
        a = up;
    }
}

/// Sequential Rem-style union-find followed by full path compression. The
/// ground-truth labelling for every comparison in this crate.
pub fn rem_union_find(graph: &Graph) -> LabelArray {
    let n = graph.num_vertices();
    let mut parent: Vec<VertexId> = (0..n as VertexId).collect();
    for &(u, v) in graph.edges() {
        unite(&mut parent, u, v);
    }
    // ascending order works because parent[v] <= v
    for v in 0..n {
        parent[v] = parent[parent[v] as usize];
    }
    normalize_labels(&parent).expect("union-find parents form a forest")
}
