//! Reference algorithms and label normalization used by every correctness
//! check.

mod bfs;
mod fastsv;
mod labels;
mod union_find;

pub use bfs::bfs_components;
pub use fastsv::{fastsv, fastsv_with};
pub use labels::{normalize_labels, summarize, ComponentSummary};
pub use union_find::rem_union_find;
