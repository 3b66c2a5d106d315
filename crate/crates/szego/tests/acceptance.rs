//! Acceptance suite: one test per exit criterion, each printing a pass line
//! once its assertions hold (run with `--nocapture` to see them).

use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use szego::bench::{run_experiment, ExperimentConfig};
use szego::kernel::{
    eval_canonical, eval_closed_form_eq30, eval_general_annulus, eval_product_eq21,
    eval_series_eq4, eval_weighted_closed_form_eq42, eval_weighted_product_eq38,
    eval_weighted_series_eq37, weighted_zero_condition, zero_location, AnnulusDomain,
    GeneralAnnulusDomain, Method, WeightedKernelParams,
};
use szego::nystrom::{assemble_ks_system, build_boundary_grid, solve_ks};
use szego::qseries::{
    cauchy_sum, psi11, q_gamma, q_pochhammer, q_pochhammer_ratio_identity_check, ramanujan_sum,
    theta_fn, PochhammerOrder,
};
use szego::TruncationSpec;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn pass(n: u32, what: &str) {
    println!("[PASS] criterion {n}: {what}");
}

fn within_order_of_magnitude(computed: f64, reference: f64) -> bool {
    computed <= 10.0 * reference && computed >= reference / 10.0
}

fn table_config(rho: f64, a: Complex64) -> ExperimentConfig {
    ExperimentConfig {
        rho,
        a,
        series4_widths: vec![10, 50, 100],
        series5_widths: vec![10, 50],
        product_depths: vec![15, 20, 25],
        node_counts: vec![16, 32, 64, 128],
        ..Default::default()
    }
}

#[test]
fn criterion_1_table1_reproduction() {
    let start = Instant::now();
    let table = run_experiment(&table_config(0.5, c(0.0, 0.7))).unwrap();
    // Published Table 1 cells, columns S10 / S50 / S100, rows n = 16..128.
    let reference = [
        (16, [2.4536e-2, 2.97754e-3, 2.97758e-3]),
        (32, [2.75019e-2, 1.15906e-5, 1.16299e-5]),
        (64, [2.75136e-2, 3.91113e-8, 1.88349e-10]),
        (128, [2.75136e-2, 3.92996e-8, 2.28878e-15]),
    ];
    for (n, row) in reference {
        for (label, expect) in ["S10", "S50", "S100"].iter().zip(row) {
            let cell = table.cell(n, label).unwrap();
            assert!(
                within_order_of_magnitude(cell, expect),
                "Table 1 cell (n = {n}, {label}): computed {cell:e}, reference {expect:e}"
            );
        }
    }
    let finest = table.cell(128, "S100").unwrap();
    assert!(finest <= 1e-12, "n = 128 / S100 cell {finest:e} exceeds 1e-12");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "Table 1 run took {elapsed:?}");
    pass(1, &format!("Table 1 reproduced, n=128/S100 = {finest:.3e}, {elapsed:.2?}"));
}

#[test]
fn criterion_2_table2_reproduction() {
    let table = run_experiment(&table_config(0.5, c(0.0, 0.7))).unwrap();
    let finest = table.cell(128, "S50*").unwrap();
    assert!(finest <= 1e-12, "n = 128 / S50* cell {finest:e} exceeds 1e-12");
    let mid = table.cell(64, "S50*").unwrap();
    assert!(
        (1e-11..=1e-9).contains(&mid),
        "n = 64 / S50* cell {mid:e} outside [1e-11, 1e-9]"
    );
    pass(2, &format!("Table 2 cells: n=128/S50* = {finest:.3e}, n=64/S50* = {mid:.3e}"));
}

#[test]
fn criterion_3_table3_reproduction() {
    let table = run_experiment(&table_config(0.5, c(0.0, 0.7))).unwrap();
    let reference = [
        (16, [2.97758e-3, 2.97758e-3, 2.97758e-3]),
        (32, [1.16296e-5, 1.16299e-5, 1.16299e-5]),
        (64, [1.44308e-10, 1.88038e-10, 1.8835e-10]),
        (128, [3.1999e-10, 3.1275e-13, 1.82618e-15]),
    ];
    for (n, row) in reference {
        for (label, expect) in ["S15**", "S20**", "S25**"].iter().zip(row) {
            let cell = table.cell(n, label).unwrap();
            assert!(
                within_order_of_magnitude(cell, expect),
                "Table 3 cell (n = {n}, {label}): computed {cell:e}, reference {expect:e}"
            );
        }
    }
    let finest = table.cell(128, "S25**").unwrap();
    assert!(finest <= 1e-12, "n = 128 / S25** cell {finest:e} exceeds 1e-12");
    // The product truncation outruns the slower bilateral series.
    let product = table.cell(64, "S25**").unwrap();
    let series = table.cell(64, "S50").unwrap();
    assert!(
        product <= series,
        "at n = 64 the product error {product:e} should not exceed the S50 error {series:e}"
    );
    pass(3, &format!("Table 3 reproduced; at n=64 product {product:.3e} <= series {series:.3e}"));
}

#[test]
fn criterion_4_four_way_agreement() {
    // Anchors chosen so both bilateral tails at N = 150 sit below the
    // tolerance over the whole closed annulus.
    let configs = [
        (0.3, Complex64::from_polar(0.6, 0.9)),
        (0.5, c(0.0, 0.7)),
        (0.7, Complex64::from_polar(0.84, 2.1)),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a3);
    let trunc = TruncationSpec::new(150, 40);
    let mut worst: f64 = 0.0;
    for (rho, a) in configs {
        let dom = AnnulusDomain::new(rho, a).unwrap();
        let mut points = Vec::new();
        for k in 0..50 {
            let angle = rng.gen_range(0.0..std::f64::consts::TAU);
            let radius = if k % 2 == 0 { 1.0 } else { rho };
            points.push(Complex64::from_polar(radius, angle));
        }
        for _ in 0..20 {
            let angle = rng.gen_range(0.0..std::f64::consts::TAU);
            let radius = rng.gen_range(rho + 0.01..0.99);
            points.push(Complex64::from_polar(radius, angle));
        }
        for z in points {
            let values: Vec<Complex64> = Method::ALL
                .iter()
                .map(|&m| eval_canonical(&dom, z, m, &trunc).unwrap())
                .collect();
            for i in 0..values.len() {
                for j in (i + 1)..values.len() {
                    let diff = (values[i] - values[j]).norm();
                    worst = worst.max(diff);
                    assert!(
                        diff < 1e-11,
                        "rho = {rho}, z = {z}: {:?} vs {:?} differ by {diff:e}",
                        Method::ALL[i],
                        Method::ALL[j]
                    );
                }
            }
        }
    }
    pass(4, &format!("four-way agreement over 210 points, worst pairwise gap {worst:.3e}"));
}

#[test]
fn criterion_5_zero_certification() {
    let rho = 0.5;
    let a = c(0.0, 0.7);
    let dom = AnnulusDomain::new(rho, a).unwrap();
    let z0 = zero_location(&dom);
    let product = eval_product_eq21(&dom, z0, &TruncationSpec::product(25)).unwrap();
    assert_eq!(product.norm(), 0.0, "product at its zero must vanish exactly");
    let series = eval_series_eq4(&dom, z0, &TruncationSpec::series(150)).unwrap();
    assert!(series.norm() < 1e-11, "series at the zero: {:e}", series.norm());

    // Weighted kernel: a zero exists iff ln t / ln rho is an odd integer.
    let weights = [rho.powi(3), rho, 1.0 / rho, rho.powi(-3), 1.0, 3.0];
    let mut qualifying = 0;
    for t in weights {
        let par = WeightedKernelParams::new(rho, a, t).unwrap();
        let exponent = t.ln() / rho.ln();
        let is_odd = (exponent - exponent.round()).abs() < 1e-10
            && (exponent.round() as i64).rem_euclid(2) == 1;
        match weighted_zero_condition(&par) {
            Some(zw) => {
                assert!(is_odd, "t = {t}: zero reported for a non-odd exponent");
                assert!((zw - z0).norm() < 1e-15);
                let v = eval_weighted_product_eq38(&par, zw, &TruncationSpec::product(25)).unwrap();
                assert_eq!(v.norm(), 0.0, "t = {t}: weighted product must vanish at its zero");
                qualifying += 1;
            }
            None => {
                assert!(!is_odd, "t = {t}: odd exponent but no zero reported");
                // Grid falsification over the closed annulus. The kernel
                // depends on z only through conj(a) z, so the anchor is free;
                // 0.8i keeps the off-domain zero lattice farthest from the
                // image annulus for both non-qualifying weights.
                let par = WeightedKernelParams::new(rho, c(0.0, 0.8), t).unwrap();
                let trunc = TruncationSpec::product(30);
                let mut min_mag = f64::INFINITY;
                for i in 0..200 {
                    let r = rho + (1.0 - rho) * i as f64 / 199.0;
                    for j in 0..200 {
                        let angle = std::f64::consts::TAU * j as f64 / 200.0;
                        let z = Complex64::from_polar(r, angle);
                        let v = eval_weighted_product_eq38(&par, z, &trunc).unwrap();
                        min_mag = min_mag.min(v.norm());
                    }
                }
                assert!(min_mag > 1e-4, "t = {t}: grid minimum {min_mag:e} suggests a zero");
            }
        }
    }
    assert_eq!(qualifying, 4);
    pass(5, "zeros certified: product exact, series < 1e-11, weighted iff odd exponent");
}

#[test]
fn criterion_6_q_identity_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x71d);
    let draws = 25;

    // Eq. (13): (alpha; q)_n (alpha q^n; q)_inf = (alpha; q)_inf.
    for _ in 0..draws {
        let q = c(rng.gen_range(0.05..0.9), 0.0);
        let alpha = Complex64::from_polar(rng.gen_range(0.1..0.9), rng.gen_range(0.0..6.28));
        let n: i64 = rng.gen_range(-8..=8);
        let qn = q.powi(n as i32);
        let finite = q_pochhammer(alpha, q, PochhammerOrder::Finite(n)).unwrap();
        let shifted = q_pochhammer(alpha * qn, q, PochhammerOrder::Infinity).unwrap();
        let full = q_pochhammer(alpha, q, PochhammerOrder::Infinity).unwrap();
        let rel = (finite * shifted - full).norm() / full.norm().max(1e-300);
        assert!(rel < 1e-12, "Eq. (13) residual {rel:e} at alpha = {alpha}, q = {q}, n = {n}");
    }

    // Eq. (11): ratio identity pair agrees.
    for _ in 0..draws {
        let q = c(rng.gen_range(0.05..0.9), 0.0);
        let alpha = Complex64::from_polar(rng.gen_range(0.1..0.9), rng.gen_range(0.0..6.28));
        let n: i64 = rng.gen_range(-10..=10);
        let (lhs, rhs) = q_pochhammer_ratio_identity_check(alpha, q, n).unwrap();
        assert!((lhs - rhs).norm() < 1e-13 * lhs.norm().max(1.0));
    }

    // Eq. (15): truncated 1psi1 against the Ramanujan product.
    let trunc = TruncationSpec::series(100);
    for _ in 0..draws {
        let q = c(rng.gen_range(0.05..0.5), 0.0);
        let alpha = Complex64::from_polar(rng.gen_range(0.4..0.9), rng.gen_range(0.0..6.28));
        let z = Complex64::from_polar(rng.gen_range(0.4..0.7), rng.gen_range(0.0..6.28));
        let ratio = Complex64::from_polar(rng.gen_range(0.0..0.7), rng.gen_range(0.0..6.28));
        let beta = alpha * z * ratio;
        let series = psi11(alpha, beta, q, z, &trunc).unwrap();
        let product = ramanujan_sum(alpha, beta, q, z).unwrap();
        assert!(
            (series - product).norm() < 1e-11,
            "Eq. (15) residual {:e}",
            (series - product).norm()
        );
    }

    // Eqs. (16)/(17): Cauchy's formula is symmetric in alpha and z.
    for _ in 0..draws {
        let q = c(rng.gen_range(0.05..0.45), 0.0);
        let alpha = Complex64::from_polar(rng.gen_range(q.re + 0.1..0.9), rng.gen_range(0.0..6.28));
        let z = Complex64::from_polar(rng.gen_range(q.re + 0.1..0.9), rng.gen_range(0.0..6.28));
        let ab = cauchy_sum(alpha, q, z).unwrap();
        let ba = cauchy_sum(z, q, alpha).unwrap();
        assert!((ab - ba).norm() < 1e-13 * ab.norm().max(1.0));
    }

    // q-gamma functional equation.
    for _ in 0..draws {
        let q = rng.gen_range(0.05..0.8);
        let x = c(rng.gen_range(0.2..2.5), rng.gen_range(-2.0..2.0));
        let ratio = q_gamma(x + c(1.0, 0.0), q).unwrap() / q_gamma(x, q).unwrap();
        let expect = (c(1.0, 0.0) - (x * q.ln()).exp()) / (1.0 - q);
        let rel = (ratio - expect).norm() / expect.norm().max(1e-300);
        assert!(rel < 1e-12, "q-gamma residual {rel:e} at x = {x}, q = {q}");
    }

    // Theta symmetry theta(x; q) = theta(q/x; q).
    for _ in 0..draws {
        let q = rng.gen_range(0.05..0.8);
        let x = Complex64::from_polar(rng.gen_range(0.1..2.0), rng.gen_range(0.0..6.28));
        let lhs = theta_fn(x, q).unwrap();
        let rhs = theta_fn(c(q, 0.0) / x, q).unwrap();
        assert!((lhs - rhs).norm() < 1e-12 * lhs.norm().max(1.0));
    }

    pass(6, "q-identity suite: Eqs. (11), (13), (15), (16)/(17), q-gamma, theta");
}

#[test]
fn criterion_7_reduction_laws() {
    let rho = 0.5;
    let a = c(0.0, 0.7);
    let dom = AnnulusDomain::new(rho, a).unwrap();
    let par = WeightedKernelParams::new(rho, a, rho).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7ed);
    let trunc = TruncationSpec::new(100, 30);
    for _ in 0..15 {
        let z = Complex64::from_polar(rng.gen_range(rho..1.0), rng.gen_range(0.0..6.28));
        let ws = eval_weighted_series_eq37(&par, z, &trunc).unwrap();
        let us = eval_series_eq4(&dom, z, &trunc).unwrap();
        assert!((ws - us).norm() < 1e-13, "weighted series reduction at z = {z}");
        let wp = eval_weighted_product_eq38(&par, z, &trunc).unwrap();
        let up = eval_product_eq21(&dom, z, &trunc).unwrap();
        assert!((wp - up).norm() < 1e-13, "weighted product reduction at z = {z}");
        let wc = eval_weighted_closed_form_eq42(&par, z).unwrap();
        let uc = eval_closed_form_eq30(&dom, z).unwrap();
        assert!((wc - uc).norm() < 1e-12, "weighted closed-form reduction at z = {z}");
    }

    let gdom = GeneralAnnulusDomain::new(c(0.0, 0.0), 1.0, rho, a).unwrap();
    for _ in 0..15 {
        let z = Complex64::from_polar(rng.gen_range(rho..1.0), rng.gen_range(0.0..6.28));
        for m in Method::ALL {
            let g = eval_general_annulus(&gdom, z, m, &trunc).unwrap();
            let k = eval_canonical(&dom, z, m, &trunc).unwrap();
            assert!((g - k).norm() < 1e-14, "general-annulus reduction, {m:?} at z = {z}");
        }
    }
    pass(7, "reduction laws: t = rho, trivial general annulus, Eq. (42) -> Eq. (30)");
}

#[test]
fn criterion_8_nystrom_solver_health() {
    let rho = 0.5;
    let a = c(0.0, 0.7);
    let dom = AnnulusDomain::new(rho, a).unwrap();

    // Weight-symmetrized kernel matrix is anti-Hermitian.
    let grid = build_boundary_grid(rho, 32).unwrap();
    let system = assemble_ks_system(&grid, a);
    let m = system.size;
    let mut max_defect: f64 = 0.0;
    for j in 0..m {
        for k in 0..m {
            let kernel_jk = if j == k {
                system.matrix[j * m + k] - 1.0
            } else {
                system.matrix[j * m + k]
            } / grid.weights[k];
            let kernel_kj = if j == k {
                system.matrix[k * m + j] - 1.0
            } else {
                system.matrix[k * m + j]
            } / grid.weights[j];
            let b_jk = grid.weights[j].sqrt() * kernel_jk * grid.weights[k].sqrt();
            let b_kj = grid.weights[k].sqrt() * kernel_kj * grid.weights[j].sqrt();
            max_defect = max_defect.max((b_jk + b_kj.conj()).norm());
        }
    }
    assert!(max_defect < 1e-13, "anti-Hermitian defect {max_defect:e}");

    // Direct-solve residual.
    let x = solve_ks(&grid, a).unwrap();
    let mut residual: f64 = 0.0;
    for j in 0..m {
        let mut acc = -system.rhs[j];
        for k in 0..m {
            acc += system.matrix[j * m + k] * x[k];
        }
        residual = residual.max(acc.norm());
    }
    assert!(residual < 1e-13, "linear-solve residual {residual:e}");

    // Errors against S100 decay monotonically as n doubles.
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
        let err = szego::nystrom::error_norm(&solution, &exact).unwrap();
        assert!(err < previous, "error {err:e} at n = {n} did not decrease from {previous:e}");
        previous = err;
    }

    pass(8, &format!("solver health: defect {max_defect:.2e}, residual {residual:.2e}, monotone decay"));
}
