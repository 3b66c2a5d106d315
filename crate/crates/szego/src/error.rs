use thiserror::Error;

/// Errors shared by the q-series, kernel and integral-equation layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An infinite product was requested with |q| >= 1.
    #[error("infinite q-Pochhammer product diverges for |q| >= 1 (|q| = {modulus})")]
    DivergentProduct { modulus: f64 },

    /// A negative-order Pochhammer denominator factor vanishes.
    #[error("q-Pochhammer denominator factor vanishes at k = {index}")]
    DivisionByZeroFactor { index: i64 },

    /// The argument lies outside the convergence region of a bilateral series.
    #[error("argument outside the series convergence region: {detail}")]
    ConvergenceRegionViolated { detail: String },

    /// A denominator product or factor is numerically zero (analytic pole).
    #[error("evaluation point hits a pole: {detail}")]
    PoleHit { detail: String },

    /// Evaluation point outside the validity region of a series formula.
    #[error("evaluation point outside the formula's domain: {detail}")]
    DomainViolation { detail: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The Nyström linear system is rank deficient.
    #[error("Kerzman-Stein linear system is singular")]
    SingularSystem,

    #[error("vector length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
