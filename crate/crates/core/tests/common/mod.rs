#![allow(dead_code)]

use contour_core::generate::random_permutation;
use contour_core::{generate, Graph, GraphKind, Schedule, Variant};

pub struct Case {
    pub name: String,
    pub graph: Graph,
}

fn push(cases: &mut Vec<Case>, name: String, graph: Graph, permutations: u64, seed: u64) {
    let n = graph.num_vertices();
    for p in 0..permutations {
        let perm = random_permutation(n, seed.wrapping_mul(31).wrapping_add(p));
        cases.push(Case {
            name: format!("{name}:perm={p}"),
            graph: graph.permute_vertices(&perm).unwrap(),
        });
    }
    cases.push(Case { name, graph });
}

const SIZES: [usize; 20] = [
    1, 2, 3, 4, 5, 7, 10, 16, 25, 40, 64, 100, 160, 250, 400, 640, 1000, 2000, 5000, 10_000,
];

/// The desk-scale correctness suite: structured families up to 10^4
/// vertices, each in natural and permuted numbering, plus Erdős–Rényi
/// graphs on both sides of the giant-component threshold.
pub fn desk_suite() -> Vec<Case> {
    let mut cases = Vec::new();
    for (family, make) in [
        ("path", (|n| GraphKind::Path { n }) as fn(usize) -> GraphKind),
        ("cycle", |n| GraphKind::Cycle { n }),
        ("star", |n| GraphKind::Star { n }),
    ] {
        for (i, &n) in SIZES.iter().enumerate() {
            let g = generate(&make(n), 0).unwrap();
            let perms = if n <= 1000 { 3 } else { 1 };
            push(&mut cases, format!("{family}:n={n}"), g, perms, i as u64);
        }
    }
    for (i, &(rows, cols)) in [
        (1, 1),
        (1, 5),
        (2, 2),
        (3, 7),
        (5, 5),
        (10, 10),
        (4, 50),
        (20, 30),
        (32, 32),
        (50, 50),
        (100, 100),
        (10, 1000),
    ]
    .iter()
    .enumerate()
    {
        let g = generate(&GraphKind::Grid2d { rows, cols }, 0).unwrap();
        push(&mut cases, format!("grid:{rows}x{cols}"), g, 2, 100 + i as u64);
    }
    for (i, &n) in SIZES.iter().enumerate() {
        for seed in 0..5u64 {
            let trees = 1 + (seed as usize * 7 + i) % n.min(20);
            let g = generate(&GraphKind::Forest { n, trees }, seed).unwrap();
            let name = format!("forest:n={n}:trees={trees}:seed={seed}");
            let perm = random_permutation(n, 1000 + seed);
            cases.push(Case {
                name,
                graph: g.permute_vertices(&perm).unwrap(),
            });
        }
    }
    const MEAN_DEGREES: [f64; 10] = [0.2, 0.5, 0.8, 1.0, 1.2, 1.5, 2.0, 3.0, 5.0, 8.0];
    for (n, seeds) in [(10usize, 20u64), (100, 20), (1000, 15), (2000, 10)] {
        for &c in &MEAN_DEGREES {
            let p = (c / (n as f64 - 1.0)).min(1.0);
            for seed in 0..seeds {
                let kind = GraphKind::ErdosRenyi { n, p };
                cases.push(Case {
                    name: format!("{kind}:seed={seed}"),
                    graph: generate(&kind, seed).unwrap(),
                });
            }
        }
    }
    cases
}

/// Every schedule combination: each variant in sync and (where allowed)
/// async mode, atomics on and off.
pub fn all_schedules() -> Vec<Schedule> {
    let mut out = Vec::new();
    for v in Variant::ALL {
        for sync in [true, false] {
            let Ok(s) = Schedule::new(v).with_sync(sync) else { continue };
            for atomic in [true, false] {
                out.push(s.with_atomic(atomic));
            }
        }
    }
    out
}

pub fn log_three_halves_bound(d: usize) -> usize {
    if d <= 1 {
        return 1;
    }
    // exact ceil(log_{3/2} d): smallest k with 1.5^k >= d
    let mut k = 0;
    let mut power = 1.0f64;
    while power < d as f64 {
        power *= 1.5;
        k += 1;
    }
    k + 1
}

pub fn sync_schedule(variant: Variant) -> Schedule {
    Schedule::new(variant).with_sync(true).unwrap().with_atomic(true)
}
