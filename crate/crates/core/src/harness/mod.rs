//! Experiment orchestration: plans of (graph, algorithm, execution)
//! entries, oracle verification and CSV output.

mod plan;
mod record;
mod runner;

pub use plan::{parse_plan, AlgorithmSpec, GraphSource, PlanEntry};
pub use record::{label_checksum, write_csv, ExperimentRecord, CSV_HEADER};
pub use runner::{run_algorithm, run_experiment, verify_labels, Mismatch, RunOutcome, SuiteOutcome, VerifyReport};
