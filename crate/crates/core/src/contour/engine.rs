use std::sync::atomic::{AtomicU32, Ordering::Relaxed};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::ops::{apply_edge, Scratch};
use super::{ConvergedBy, IterationStats, LabelArray, Schedule};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

/// How a run executes. `threads == 1` sweeps the edges in file order and is
/// the deterministic reference mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExecConfig {
    pub threads: usize,
    /// With more than one thread, each worker starts its chunk at a
    /// seed-derived offset each sweep, varying the interleaving between
    /// runs. Ignored when sequential.
    pub seed: u64,
}

impl ExecConfig {
    pub fn sequential() -> Self {
        ExecConfig { threads: 1, seed: 0 }
    }

    pub fn parallel(threads: usize, seed: u64) -> Self {
        ExecConfig { threads, seed }
    }
}

impl Default for ExecConfig {
    fn default() -> Self {
        ExecConfig::sequential()
    }
}

pub(crate) trait LabelSource: Sync {
    fn label(&self, v: VertexId) -> VertexId;
}

impl LabelSource for [VertexId] {
    #[inline]
    fn label(&self, v: VertexId) -> VertexId {
        self[v as usize]
    }
}

impl LabelSource for [AtomicU32] {
    #[inline]
    fn label(&self, v: VertexId) -> VertexId {
        self[v as usize].load(Relaxed)
    }
}

pub(crate) fn is_converged<L: LabelSource + ?Sized>(
    graph: &Graph,
    labels: &L,
    parallel: bool,
) -> bool {
    let n = graph.num_vertices() as VertexId;
    let idempotent = |v: VertexId| {
        let l = labels.label(v);
        labels.label(l) == l
    };
    let agrees = |&(u, w): &Edge| labels.label(u) == labels.label(w);
    if parallel {
        (0..n).into_par_iter().all(idempotent) && graph.edges().par_iter().all(agrees)
    } else {
        (0..n).all(idempotent) && graph.edges().iter().all(agrees)
    }
}

/// True iff `L[L[v]] == L[v]` for every vertex and `L[u] == L[w]` for every
/// edge. `parallel` evaluates the reduction on the global rayon pool.
pub fn early_convergence_check(graph: &Graph, labels: &[VertexId], parallel: bool) -> bool {
    assert_eq!(labels.len(), graph.num_vertices(), "one label per vertex");
    is_converged(graph, labels, parallel)
}

fn atomic_identity(n: usize) -> Vec<AtomicU32> {
    (0..n as VertexId).map(AtomicU32::new).collect()
}

pub(crate) fn snapshot(cells: &[AtomicU32]) -> Vec<VertexId> {
    cells.iter().map(|c| c.load(Relaxed)).collect()
}

fn sweep_range(
    edges: &[Edge],
    start: usize,
    target: &[AtomicU32],
    read: &[AtomicU32],
    h: u32,
    atomic: bool,
) -> u64 {
    let mut scratch = Scratch::default();
    let (tail, head) = edges.split_at(start);
    head.iter()
        .chain(tail)
        .map(|&(w, v)| apply_edge(target, read, w, v, h, atomic, &mut scratch) as u64)
        .sum()
}

/// Contiguous static edge chunks, one per worker.
fn chunk_bounds(m: usize, threads: usize) -> Vec<(usize, usize)> {
    let chunk = m.div_ceil(threads.max(1)).max(1);
    (0..m)
        .step_by(chunk)
        .map(|lo| (lo, (lo + chunk).min(m)))
        .collect()
}

pub fn run_contour(
    graph: &Graph,
    schedule: &Schedule,
    exec: ExecConfig,
) -> Result<(LabelArray, IterationStats)> {
    run(graph, schedule, exec, None)
}

/// Like [`run_contour`], calling `observer(k, labels)` with a snapshot of
/// the label array after every sweep `k`.
pub fn run_contour_observed(
    graph: &Graph,
    schedule: &Schedule,
    exec: ExecConfig,
    mut observer: impl FnMut(usize, &[VertexId]),
) -> Result<(LabelArray, IterationStats)> {
    run(graph, schedule, exec, Some(&mut observer))
}

type SweepObserver<'a> = dyn FnMut(usize, &[VertexId]) + 'a;

fn run(
    graph: &Graph,
    schedule: &Schedule,
    exec: ExecConfig,
    mut observer: Option<&mut SweepObserver<'_>>,
) -> Result<(LabelArray, IterationStats)> {
    if exec.threads == 0 {
        return Err(Error::param("thread count must be at least 1"));
    }
    let n = graph.num_vertices();
    let edges = graph.edges();
    let labels = atomic_identity(n);
    let shadow = if schedule.is_sync() {
        atomic_identity(n)
    } else {
        Vec::new()
    };

    let pool = if exec.threads > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(exec.threads)
                .build()
                .map_err(|e| Error::Internal(format!("thread pool: {e}")))?,
        )
    } else {
        None
    };
    let chunks = chunk_bounds(edges.len(), exec.threads);
    let mut rng = ChaCha8Rng::seed_from_u64(exec.seed);

    let mut stats = IterationStats {
        sweeps_executed: 0,
        sweeps_until_stable: 0,
        changes_per_sweep: Vec::new(),
        converged_by: ConvergedBy::ChangeFlag,
        sweep_times: Vec::new(),
    };
    let cap = n + 2;

    for k in 1.. {
        if k > cap {
            return Err(Error::Internal(format!(
                "{} did not converge within {cap} sweeps",
                schedule.variant()
            )));
        }
        let h = schedule.order_for(k);
        let atomic = schedule.is_atomic();
        let (target, read) = if schedule.is_sync() {
            (&shadow[..], &labels[..])
        } else {
            (&labels[..], &labels[..])
        };

        let started = Instant::now();
        let changes: u64 = match &pool {
            None => sweep_range(edges, 0, target, read, h, atomic),
            Some(pool) => {
                let work: Vec<(usize, usize, usize)> = chunks
                    .iter()
                    .map(|&(lo, hi)| (lo, hi, rng.gen_range(0..hi - lo)))
                    .collect();
                pool.install(|| {
                    work.par_iter()
                        .map(|&(lo, hi, start)| {
                            sweep_range(&edges[lo..hi], start, target, read, h, atomic)
                        })
                        .sum()
                })
            }
        };
        if schedule.is_sync() {
            let copy = |(dst, src): (&AtomicU32, &AtomicU32)| dst.store(src.load(Relaxed), Relaxed);
            match &pool {
                None => labels.iter().zip(&shadow).for_each(copy),
                Some(pool) => pool.install(|| labels.par_iter().zip(&shadow).for_each(copy)),
            }
        }

        let converged_early = changes > 0
            && schedule.early_check()
            && match &pool {
                None => is_converged(graph, &labels[..], false),
                Some(pool) => pool.install(|| is_converged(graph, &labels[..], true)),
            };
        stats.sweep_times.push(started.elapsed());
        stats.sweeps_executed = k;
        stats.changes_per_sweep.push(changes);
        if changes > 0 {
            stats.sweeps_until_stable = k;
        }
        if let Some(observe) = observer.as_mut() {
            observe(k, &snapshot(&labels));
        }

        if changes == 0 {
            stats.converged_by = ConvergedBy::ChangeFlag;
            break;
        }
        if converged_early {
            stats.converged_by = ConvergedBy::EarlyCheck;
            break;
        }
    }

    Ok((LabelArray::from(snapshot(&labels)), stats))
}
