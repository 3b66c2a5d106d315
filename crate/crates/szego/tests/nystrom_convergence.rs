//! Convergence and stability behavior of the boundary-integral oracle on
//! its own, independent of the analytic evaluators.

use num_complex::Complex64;
use szego::kernel::{eval_series_eq4, AnnulusDomain};
use szego::nystrom::{build_boundary_grid, error_norm, solve_ks};
use szego::TruncationSpec;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn error_decays_geometrically_in_node_count() {
    let rho = 0.5;
    let a = c(0.0, 0.7);
    let dom = AnnulusDomain::new(rho, a).unwrap();
    let trunc = TruncationSpec::series(100);
    let mut previous = f64::INFINITY;
    for n in [16, 32, 64, 128] {
        let grid = build_boundary_grid(rho, n).unwrap();
        let solution = solve_ks(&grid, a).unwrap();
        let exact: Vec<Complex64> = grid
            .nodes
            .iter()
            .map(|&z| eval_series_eq4(&dom, z, &trunc).unwrap())
            .collect();
        let err = error_norm(&solution, &exact).unwrap();
        // At least geometric: each doubling of n gains a factor >= 4 until
        // the error floors near machine precision.
        assert!(
            err < previous / 4.0 || err < 1e-13,
            "n = {n}: error {err:e} did not decay from {previous:e}"
        );
        previous = err;
    }
    assert!(previous < 1e-12, "finest grid error {previous:e}");
}

#[test]
fn solution_sup_norm_stays_bounded() {
    let rho = 0.5;
    let a = c(0.0, 0.7);
    let mut norms = Vec::new();
    for n in [16, 32, 64, 128] {
        let grid = build_boundary_grid(rho, n).unwrap();
        let solution = solve_ks(&grid, a).unwrap();
        let sup = solution.iter().map(|v| v.norm()).fold(0.0, f64::max);
        norms.push(sup);
    }
    let max = norms.iter().cloned().fold(0.0, f64::max);
    let min = norms.iter().cloned().fold(f64::INFINITY, f64::min);
    assert!(max < 2.0 * min, "sup norms blow up across refinements: {norms:?}");
}
