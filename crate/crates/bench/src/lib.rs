//! Fixture graphs shared by the criterion benchmarks.

use contour_core::generate::random_permutation;
use contour_core::{generate, Graph, GraphKind};

/// Low-diameter random graph, a mid-diameter grid and a long permuted path.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    let er = generate(&GraphKind::ErdosRenyi { n: 50_000, p: 8.0 / 50_000.0 }, 1).unwrap();
    let grid = generate(&GraphKind::Grid2d { rows: 200, cols: 200 }, 0).unwrap();
    let path = generate(&GraphKind::Path { n: 20_000 }, 0).unwrap();
    let path = path.permute_vertices(&random_permutation(20_000, 7)).unwrap();
    vec![("er_50k_deg8", er), ("grid_200x200", grid), ("path_20k_permuted", path)]
}
