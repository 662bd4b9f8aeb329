use std::collections::VecDeque;

use crate::contour::LabelArray;
use crate::graph::{Graph, VertexId};

/// Breadth-first search from every unvisited vertex in ascending order.
/// Each source is the minimum of its component, so the output is already
/// normalized.
pub fn bfs_components(graph: &Graph) -> LabelArray {
    let n = graph.num_vertices();
    let mut labels = vec![VertexId::MAX; n];
    let mut frontier = VecDeque::new();
    for source in 0..n as VertexId {
        if labels[source as usize] != VertexId::MAX {
            continue;
        }
        labels[source as usize] = source;
        frontier.push_back(source);
        while let Some(u) = frontier.pop_front() {
            for &w in graph.neighbors(u) {
                if labels[w as usize] == VertexId::MAX {
                    labels[w as usize] = source;
                    frontier.push_back(w);
                }
            }
        }
    }
    labels.into()
}
