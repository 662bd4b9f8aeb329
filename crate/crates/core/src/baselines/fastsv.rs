use std::sync::atomic::{AtomicU32, Ordering::Relaxed};
use std::time::Instant;

use rayon::prelude::*;

use super::labels::normalize_labels;
use crate::contour::{ConvergedBy, IterationStats, LabelArray};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

/// Sequential FastSV with atomic lowering.
pub fn fastsv(graph: &Graph) -> Result<(LabelArray, IterationStats)> {
    fastsv_with(graph, 1, true)
}

/// FastSV: each iteration reads the parent vector `f` and its grandparents
/// `gf` and lowers a shadow copy `f_next` three ways, for every edge
/// direction `(u, v)`:
///
/// * stochastic hooking: `f_next[f[u]]` toward `gf[v]`
/// * aggressive hooking: `f_next[u]` toward `gf[v]`
/// * shortcutting: `f_next[u]` toward `gf[u]`
///
/// then sets `f = f_next`. Stops once `gf` is unchanged by an iteration.
pub fn fastsv_with(graph: &Graph, threads: usize, atomic: bool) -> Result<(LabelArray, IterationStats)> {
    if threads == 0 {
        return Err(Error::param("thread count must be at least 1"));
    }
    let n = graph.num_vertices();
    let edges = graph.edges();
    let mut f: Vec<VertexId> = (0..n as VertexId).collect();
    let mut gf = f.clone();
    let next: Vec<AtomicU32> = f.iter().map(|&x| AtomicU32::new(x)).collect();
    let pool = match threads {
        1 => None,
        t => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::Internal(format!("thread pool: {e}")))?,
        ),
    };
    let lower = |cell: &AtomicU32, z: VertexId| crate::contour::lower_cell(cell, z, atomic) as u64;

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
            return Err(Error::Internal(format!("FastSV did not converge within {cap} iterations")));
        }
        let started = Instant::now();
        let hook = |&(u, v): &Edge| {
            let (u, v) = (u as usize, v as usize);
            lower(&next[f[u] as usize], gf[v])
                + lower(&next[f[v] as usize], gf[u])
                + lower(&next[u], gf[v])
                + lower(&next[v], gf[u])
        };
        let shortcut = |u: usize| lower(&next[u], gf[u]);
        let changes: u64 = match &pool {
            None => edges.iter().map(hook).sum::<u64>() + (0..n).map(shortcut).sum::<u64>(),
            Some(pool) => pool.install(|| {
                let chunk = edges.len().div_ceil(threads).max(1);
                edges
                    .par_chunks(chunk)
                    .map(|c| c.iter().map(hook).sum::<u64>())
                    .sum::<u64>()
                    + (0..n).into_par_iter().map(shortcut).sum::<u64>()
            }),
        };

        for (dst, src) in f.iter_mut().zip(&next) {
            *dst = src.load(Relaxed);
        }
        let grandparents: Vec<VertexId> = f.iter().map(|&p| f[p as usize]).collect();
        let stable = grandparents == gf;
        gf = grandparents;

        stats.sweep_times.push(started.elapsed());
        stats.sweeps_executed = k;
        stats.changes_per_sweep.push(changes);
        if changes > 0 {
            stats.sweeps_until_stable = k;
        }
        if stable {
            break;
        }
    }

    Ok((normalize_labels(&f)?, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baselines::rem_union_find;
    use crate::generate::{generate, GraphKind};

    #[test]
    fn examples() {
        let g = generate(&GraphKind::Path { n: 3 }, 0).unwrap();
        assert_eq!(fastsv(&g).unwrap().0.as_slice(), [0, 0, 0]);

        let g = Graph::from_edges(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(fastsv(&g).unwrap().0, rem_union_find(&g));

        let g = generate(&GraphKind::ErdosRenyi { n: 200, p: 0.02 }, 1).unwrap();
        assert_eq!(fastsv(&g).unwrap().0, rem_union_find(&g));
    }

    #[test]
    fn parallel_and_plain_stores_agree() {
        for seed in 0..10 {
            let g = generate(&GraphKind::ErdosRenyi { n: 400, p: 0.004 }, seed).unwrap();
            let oracle = rem_union_find(&g);
            for threads in [1, 3] {
                for atomic in [true, false] {
                    assert_eq!(fastsv_with(&g, threads, atomic).unwrap().0, oracle);
                }
            }
        }
    }

    #[test]
    fn sequential_stats_are_deterministic() {
        let g = generate(&GraphKind::Grid2d { rows: 20, cols: 30 }, 0).unwrap();
        let (_, a) = fastsv(&g).unwrap();
        let (_, b) = fastsv(&g).unwrap();
        assert_eq!(a.sweeps_executed, b.sweeps_executed);
        assert_eq!(a.changes_per_sweep, b.changes_per_sweep);
        assert!(a.sweeps_until_stable <= a.sweeps_executed);
        assert!(a.sweeps_executed <= a.sweeps_until_stable + 1);
    }

    #[test]
    fn empty_graph() {
        let (labels, stats) = fastsv(&Graph::empty()).unwrap();
        assert!(labels.is_empty());
        assert_eq!(stats.sweeps_until_stable, 0);
    }
}
