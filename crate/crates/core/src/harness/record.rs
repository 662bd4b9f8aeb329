use std::io::Write;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::baselines::summarize;
use crate::error::Result;
use crate::graph::VertexId;

/// One measured run. Field order is the CSV column order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentRecord {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub algorithm: String,
    pub variant: String,
    pub sync: bool,
    pub atomic: bool,
    pub threads: usize,
    pub sweeps_until_stable: usize,
    pub sweeps_executed: usize,
    /// Median over repeats.
    pub wall_ms: f64,
    pub components: usize,
    pub checksum: String,
    pub oracle_match: bool,
}

pub const CSV_HEADER: [&str; 14] = [
    "graph",
    "n",
    "m",
    "algorithm",
    "variant",
    "sync",
    "atomic",
    "threads",
    "sweeps_until_stable",
    "sweeps_executed",
    "wall_ms",
    "components",
    "checksum",
    "oracle_match",
];

/// Order-independent digest of a normalized labelling: SHA-256 over the
/// sorted `(component minimum, size)` pairs, truncated to 16 hex digits.
pub fn label_checksum(labels: &[VertexId]) -> String {
    let mut hasher = Sha256::new();
    for (min, size) in summarize(labels).sizes {
        hasher.update((min as u64).to_le_bytes());
        hasher.update((size as u64).to_le_bytes());
    }
    hasher
        .finalize()
        .iter()
        .take(8)
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Header row, then one row per record.
pub fn write_csv<W: Write>(records: &[ExperimentRecord], sink: W) -> Result<()> {
    let mut writer = csv::WriterBuilder::new().has_headers(false).from_writer(sink);
    writer.write_record(CSV_HEADER)?;
    for record in records {
        writer.serialize(record)?;
    }
    writer.flush()?;
    Ok(())
}
