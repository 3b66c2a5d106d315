//! Numerical evaluation of the Szegő kernel of an annulus by four
//! mathematically equivalent routes — two bilateral series, an infinite
//! product, and a theta / q-gamma closed form — extended to general annuli
//! and the weighted Szegő kernel, and cross-validated against an independent
//! Nyström solution of the Kerzman-Stein integral equation.
//!
//! Modules:
//! - [`qseries`]: q-Pochhammer symbols, the 1ψ1 bilateral series,
//!   Ramanujan's summation, the q-gamma and modified Jacobi theta functions.
//! - [`kernel`]: the four kernel evaluators, general-annulus dispatch,
//!   weighted kernel, and zero-location utilities.
//! - [`nystrom`]: independent boundary-integral oracle (trapezoidal Nyström
//!   discretization of the Kerzman-Stein equation).
//! - [`bench`]: the convergence-table experiment harness used by the
//!   `szego-bench` CLI.
//! - [`parse`]: complex literals in `a+bi` form for the CLI and config files.

pub mod bench;
pub mod error;
pub mod kernel;
pub mod nystrom;
pub mod parse;
pub mod qseries;

pub use error::{Error, Result};

/// Truncation bounds: symmetric series half-width N (sum over -N..N) and
/// infinite-product depth P (product over n = 0..P).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncationSpec {
    pub series_half_width: usize,
    pub product_depth: usize,
}

impl TruncationSpec {
    pub fn new(series_half_width: usize, product_depth: usize) -> Self {
        Self { series_half_width, product_depth }
    }

    /// Spec with the given series half-width and the default product depth.
    pub fn series(n: usize) -> Self {
        Self { series_half_width: n, ..Self::default() }
    }

    /// Spec with the given product depth and the default series half-width.
    pub fn product(p: usize) -> Self {
        Self { product_depth: p, ..Self::default() }
    }
}

impl Default for TruncationSpec {
    fn default() -> Self {
        // N = 100 and P = 25 match the finest truncations of the benchmark.
        Self { series_half_width: 100, product_depth: 25 }
    }
}
