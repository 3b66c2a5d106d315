//! Independent boundary-integral oracle: Nyström discretization of the
//! Kerzman-Stein integral equation on the two-circle boundary of the
//! annulus, using the trapezoidal rule (spectrally accurate on analytic
//! closed curves) and a dense pivoted LU solve.
//!
//! Nothing here touches the series / product / closed-form evaluators; the
//! comparison happens only in the benchmark harness and tests.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Quadrature nodes, unit tangents T(z) = z'(t)/|z'(t)| and arc-length
/// weights on Γ0 ∪ Γ1. Γ0 is the unit circle traversed counterclockwise,
/// Γ1 the circle of radius rho traversed clockwise (e^{-it} parametrization).
#[derive(Debug, Clone)]
pub struct BoundaryGrid {
    pub nodes: Vec<Complex64>,
    pub tangents: Vec<Complex64>,
    pub weights: Vec<f64>,
}

impl BoundaryGrid {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// The dense discretized system (I + A W) x = g.
#[derive(Debug, Clone)]
pub struct KsSystem {
    /// Row-major n x n matrix.
    pub matrix: Vec<Complex64>,
    pub rhs: Vec<Complex64>,
    pub size: usize,
}

/// n equispaced trapezoidal nodes on each boundary circle (2n nodes total),
/// with tangents i e^{it} on Γ0 and -i e^{-it} on Γ1 and weights 2π/n and
/// 2π rho/n respectively.
pub fn build_boundary_grid(rho: f64, n: usize) -> Result<BoundaryGrid> {
    if !(0.0 < rho && rho < 1.0) {
        return Err(Error::InvalidArgument(format!("need 0 < rho < 1, got {rho}")));
    }
    if n < 4 || n % 2 != 0 {
        return Err(Error::InvalidArgument(format!("need even n >= 4 nodes per curve, got {n}")));
    }
    let mut nodes = Vec::with_capacity(2 * n);
    let mut tangents = Vec::with_capacity(2 * n);
    let mut weights = Vec::with_capacity(2 * n);
    let i = Complex64::new(0.0, 1.0);
    for j in 0..n {
        let t = TAU * j as f64 / n as f64;
        let e = Complex64::from_polar(1.0, t);
        nodes.push(e);
        tangents.push(i * e);
        weights.push(TAU / n as f64);
    }
    for j in 0..n {
        let t = TAU * j as f64 / n as f64;
        let e = Complex64::from_polar(1.0, -t);
        nodes.push(rho * e);
        tangents.push(-i * e);
        weights.push(TAU * rho / n as f64);
    }
    Ok(BoundaryGrid { nodes, tangents, weights })
}

/// The Kerzman-Stein kernel
/// A(z, w) = (1/(2πi)) (T(w)/(z-w) - conj(T(z))/(conj z - conj w)),
/// zero on the diagonal by convention. Skew-Hermitian:
/// A(z, w) = -conj(A(w, z)).
pub fn ks_kernel(z: Complex64, tz: Complex64, w: Complex64, tw: Complex64) -> Complex64 {
    if z == w {
        return Complex64::new(0.0, 0.0);
    }
    let diff = z - w;
    (tw / diff - (tz / diff).conj()) / Complex64::new(0.0, TAU)
}

/// Right-hand side g(z) = -(1/(2πi)) conj(T(z)) / (conj z - conj a).
pub fn ks_rhs(z: Complex64, tz: Complex64, a: Complex64) -> Complex64 {
    -(tz.conj() / (z.conj() - a.conj())) / Complex64::new(0.0, TAU)
}

/// Assemble (I + A W) x = g at the grid nodes.
pub fn assemble_ks_system(grid: &BoundaryGrid, a: Complex64) -> KsSystem {
    let m = grid.len();
    let mut matrix = vec![Complex64::new(0.0, 0.0); m * m];
    for j in 0..m {
        for k in 0..m {
            let mut entry = ks_kernel(grid.nodes[j], grid.tangents[j], grid.nodes[k], grid.tangents[k])
                * grid.weights[k];
            if j == k {
                entry += 1.0;
            }
            matrix[j * m + k] = entry;
        }
    }
    let rhs = (0..m).map(|j| ks_rhs(grid.nodes[j], grid.tangents[j], a)).collect();
    KsSystem { matrix, rhs, size: m }
}

/// Dense LU with partial pivoting, solving in place. Rank deficiency (a
/// pivot at roundoff scale) reports `SingularSystem`.
fn lu_solve(mut a: Vec<Complex64>, mut b: Vec<Complex64>, n: usize) -> Result<Vec<Complex64>> {
    for col in 0..n {
        let mut pivot_row = col;
        let mut pivot_mag = a[col * n + col].norm();
        for row in (col + 1)..n {
            let mag = a[row * n + col].norm();
            if mag > pivot_mag {
                pivot_mag = mag;
                pivot_row = row;
            }
        }
        if pivot_mag < 1e-300 {
            return Err(Error::SingularSystem);
        }
        if pivot_row != col {
            for k in 0..n {
                a.swap(col * n + k, pivot_row * n + k);
            }
            b.swap(col, pivot_row);
        }
        let pivot = a[col * n + col];
        for row in (col + 1)..n {
            let factor = a[row * n + col] / pivot;
            if factor.norm() == 0.0 {
                continue;
            }
            a[row * n + col] = factor;
            for k in (col + 1)..n {
                let sub = factor * a[col * n + k];
                a[row * n + k] -= sub;
            }
            let sub = factor * b[col];
            b[row] -= sub;
        }
    }
    // Back substitution.
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for k in (row + 1)..n {
            acc -= a[row * n + k] * x[k];
        }
        x[row] = acc / a[row * n + row];
    }
    Ok(x)
}

/// Solve the discretized Kerzman-Stein equation, returning the approximate
/// boundary values of S(z, a) at the grid nodes.
pub fn solve_ks(grid: &BoundaryGrid, a: Complex64) -> Result<Vec<Complex64>> {
    let system = assemble_ks_system(grid, a);
    lu_solve(system.matrix, system.rhs, system.size)
}

/// Sup-norm discrepancy max_j |a_j - b_j|.
pub fn error_norm(values_a: &[Complex64], values_b: &[Complex64]) -> Result<f64> {
    if values_a.len() != values_b.len() {
        return Err(Error::LengthMismatch { left: values_a.len(), right: values_b.len() });
    }
    Ok(values_a
        .iter()
        .zip(values_b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max))
}
