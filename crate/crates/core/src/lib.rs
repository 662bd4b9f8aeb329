//! Shared-memory connected components by minimum mapping.
//!
//! Labels start as `L[v] = v`. Every sweep applies an order-`h` operator to
//! each edge, lowering the endpoints and their first `h - 1` mapped
//! ancestors to the minimum `h`-fold mapped label, until every component is
//! a star rooted at its smallest vertex. Union-find, FastSV and BFS are
//! included as baselines, together with loaders, generators and an
//! experiment harness.

pub mod baselines;
pub mod contour;
pub mod error;
pub mod generate;
pub mod graph;
pub mod harness;
pub mod io;
pub mod metrics;

pub use baselines::{bfs_components, fastsv, normalize_labels, rem_union_find, summarize, ComponentSummary};
pub use contour::{
    early_convergence_check, forest_diagnostics, make_schedule, run_contour, ConvergedBy, ExecConfig,
    ForestDiagnostics, IterationStats, LabelArray, Schedule, Variant,
};
pub use error::{Error, Result};
pub use generate::{generate, GraphKind};
pub use graph::{Edge, Graph, VertexId};
pub use io::{load_edge_list, load_graph, load_matrix_market, EdgeListOptions, Format};
pub use metrics::{exact_metrics, GraphMetrics};
