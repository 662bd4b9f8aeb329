//! Minimum-mapping connectivity: operators, variant schedules, the sweep
//! engine and pointer-forest diagnostics.

mod diagnostics;
mod engine;
mod ops;
mod schedule;

use std::ops::Deref;
use std::time::Duration;

pub use diagnostics::{forest_diagnostics, ForestDiagnostics};
pub use engine::{early_convergence_check, run_contour, run_contour_observed, ExecConfig};
pub use ops::{conditional_min_assign, mm_order};
pub(crate) use ops::lower as lower_cell;
pub use schedule::{make_schedule, Schedule, Variant, DEFAULT_ORDER_M, DEFAULT_WARMUP};

use crate::graph::VertexId;

/// Per-vertex labels indexed by dense vertex ID.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LabelArray(Vec<VertexId>);

impl LabelArray {
    /// `labels[v] = v` for every vertex.
    pub fn identity(n: usize) -> Self {
        LabelArray((0..n as VertexId).collect())
    }

    pub fn into_inner(self) -> Vec<VertexId> {
        self.0
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }
}

impl Deref for LabelArray {
    type Target = [VertexId];

    fn deref(&self) -> &[VertexId] {
        &self.0
    }
}

impl From<Vec<VertexId>> for LabelArray {
    fn from(labels: Vec<VertexId>) -> Self {
        LabelArray(labels)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConvergedBy {
    /// A full sweep lowered nothing.
    ChangeFlag,
    /// The edge-agreement plus idempotence predicate held after a sweep.
    EarlyCheck,
}

/// Counters for an iterative run. A sweep is one full pass over the edges.
#[derive(Clone, Debug, PartialEq)]
pub struct IterationStats {
    pub sweeps_executed: usize,
    /// Index (1-based) of the last sweep that lowered any label; 0 when
    /// nothing ever changed.
    pub sweeps_until_stable: usize,
    /// Successful lowering writes per sweep.
    pub changes_per_sweep: Vec<u64>,
    pub converged_by: ConvergedBy,
    pub sweep_times: Vec<Duration>,
}

impl IterationStats {
    pub fn total_time(&self) -> Duration {
        self.sweep_times.iter().sum()
    }
}
