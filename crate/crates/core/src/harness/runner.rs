use std::collections::HashMap;
use std::time::{Duration, Instant};

use super::plan::{AlgorithmSpec, PlanEntry};
use super::record::{label_checksum, ExperimentRecord};
use crate::baselines::{bfs_components, fastsv_with, rem_union_find, summarize};
use crate::contour::{run_contour, ExecConfig, IterationStats, LabelArray};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub labels: LabelArray,
    /// `None` for the non-iterative baselines.
    pub stats: Option<IterationStats>,
    pub elapsed: Duration,
}

/// Runs one algorithm and returns normalized labels.
pub fn run_algorithm(graph: &Graph, algorithm: &AlgorithmSpec, exec: ExecConfig) -> Result<RunOutcome> {
    let started = Instant::now();
    let (labels, stats) = match algorithm {
        AlgorithmSpec::Contour(schedule) => {
            let (labels, stats) = run_contour(graph, schedule, exec)?;
            (labels, Some(stats))
        }
        AlgorithmSpec::FastSv { atomic } => {
            let (labels, stats) = fastsv_with(graph, exec.threads, *atomic)?;
            (labels, Some(stats))
        }
        AlgorithmSpec::UnionFind => (rem_union_find(graph), None),
        AlgorithmSpec::Bfs => (bfs_components(graph), None),
    };
    Ok(RunOutcome {
        labels,
        stats,
        elapsed: started.elapsed(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub vertex: usize,
    pub expected: Option<VertexId>,
    pub found: Option<VertexId>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub matches: bool,
    pub first_mismatch: Option<Mismatch>,
}

/// Compares `labels` against the union-find oracle.
pub fn verify_labels(graph: &Graph, labels: &[VertexId]) -> VerifyReport {
    compare(&rem_union_find(graph), labels)
}

fn compare(expected: &[VertexId], labels: &[VertexId]) -> VerifyReport {
    let longest = expected.len().max(labels.len());
    let first_mismatch = (0..longest)
        .find(|&v| expected.get(v) != labels.get(v))
        .map(|vertex| Mismatch {
            vertex,
            expected: expected.get(vertex).copied(),
            found: labels.get(vertex).copied(),
        });
    VerifyReport {
        matches: first_mismatch.is_none(),
        first_mismatch,
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOutcome {
    pub records: Vec<ExperimentRecord>,
    /// One message per load failure, run failure or oracle mismatch.
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn median_ms(mut times: Vec<Duration>) -> f64 {
    times.sort_unstable();
    let mid = times.len() / 2;
    let median = if times.len() % 2 == 1 {
        times[mid]
    } else {
        (times[mid - 1] + times[mid]) / 2
    };
    median.as_secs_f64() * 1e3
}

/// Executes every entry `repeats` times, one run at a time. Wall time is the
/// median over repeats; iteration counts come from the first repeat. Every
/// repeat is checked against the oracle. Failures are recorded and the
/// suite keeps going.
pub fn run_experiment(plan: &[PlanEntry], repeats: usize) -> Result<SuiteOutcome> {
    if repeats == 0 {
        return Err(Error::param("repeats must be at least 1"));
    }
    let mut outcome = SuiteOutcome::default();
    let mut cache: HashMap<String, (Graph, LabelArray)> = HashMap::new();

    for entry in plan {
        let name = entry.source.to_string();
        let mut record = ExperimentRecord {
            graph: name.clone(),
            n: 0,
            m: 0,
            algorithm: entry.algorithm.name().to_string(),
            variant: entry.algorithm.variant_name(),
            sync: entry.algorithm.is_sync(),
            atomic: entry.algorithm.is_atomic(),
            threads: entry.threads,
            sweeps_until_stable: 0,
            sweeps_executed: 0,
            wall_ms: 0.0,
            components: 0,
            checksum: String::new(),
            oracle_match: false,
        };

        if !cache.contains_key(&name) {
            match entry.source.load() {
                Ok(graph) => {
                    let oracle = rem_union_find(&graph);
                    cache.insert(name.clone(), (graph, oracle));
                }
                Err(e) => {
                    outcome.failures.push(format!("{name}: load failed: {e}"));
                    outcome.records.push(record);
                    continue;
                }
            }
        }
        let (graph, oracle) = &cache[&name];
        record.n = graph.num_vertices();
        record.m = graph.num_edges();

        let exec = ExecConfig::parallel(entry.threads, entry.seed);
        let mut times = Vec::with_capacity(repeats);
        let mut all_match = true;
        let mut failed = false;
        for repeat in 0..repeats {
            let run = match run_algorithm(graph, &entry.algorithm, exec) {
                Ok(run) => run,
                Err(e) => {
                    outcome.failures.push(format!("{name} {}: {e}", entry.algorithm.name()));
                    failed = true;
                    break;
                }
            };
            times.push(run.elapsed);
            let report = compare(oracle, &run.labels);
            if !report.matches {
                all_match = false;
                if let Some(m) = report.first_mismatch {
                    outcome.failures.push(format!(
                        "{name} {} {}: vertex {} labelled {:?}, expected {:?}",
                        entry.algorithm.name(),
                        entry.algorithm.variant_name(),
                        m.vertex,
                        m.found,
                        m.expected
                    ));
                }
            }
            if repeat == 0 {
                if let Some(stats) = &run.stats {
                    record.sweeps_until_stable = stats.sweeps_until_stable;
                    record.sweeps_executed = stats.sweeps_executed;
                }
                record.components = summarize(&run.labels).count();
                record.checksum = label_checksum(&run.labels);
            }
        }
        if !failed {
            record.wall_ms = median_ms(times);
            record.oracle_match = all_match;
        }
        outcome.records.push(record);
    }
    Ok(outcome)
}
