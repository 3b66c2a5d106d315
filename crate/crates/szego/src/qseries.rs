//! Basic (q-) special functions: q-Pochhammer symbols, the 1ψ1 bilateral
//! series, Ramanujan's summation and Cauchy's formula, the q-gamma function
//! and the modified Jacobi theta function.
//!
//! Everything here assumes |q| < 1; the artifact uses real 0 < q < 1
//! throughout but the Pochhammer machinery accepts complex q.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::TruncationSpec;

/// A denominator factor smaller than this flags an analytic pole instead of
/// producing a huge value.
pub const POLE_TOL: f64 = 1e-14;

/// Infinite products stop once the running |alpha q^k| drops below this.
pub const PRODUCT_CUTOFF: f64 = 1e-17;

/// Order of a q-Pochhammer symbol: any signed integer, or infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PochhammerOrder {
    Finite(i64),
    Infinity,
}

/// Base q and parameters alpha, beta for the 1ψ1 machinery.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QSeriesParams {
    pub q: Complex64,
    pub alpha: Complex64,
    pub beta: Option<Complex64>,
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// (alpha; q)_inf = prod_{k>=0} (1 - alpha q^k), truncated when the running
/// factor deviation |alpha q^k| falls below [`PRODUCT_CUTOFF`] and at least
/// ceil(ln cutoff / ln |q|) factors have been taken. With `check_poles`,
/// a factor of magnitude below [`POLE_TOL`] aborts with `PoleHit`.
fn pochhammer_inf(alpha: Complex64, q: Complex64, check_poles: bool) -> Result<Complex64> {
    let qn = q.norm();
    if qn >= 1.0 {
        return Err(Error::DivergentProduct { modulus: qn });
    }
    let min_depth: usize = if qn == 0.0 {
        1
    } else {
        ((PRODUCT_CUTOFF.ln() / qn.ln()).ceil() as usize).min(2_000_000)
    };
    let mut prod = one();
    let mut aqk = alpha;
    let mut k: usize = 0;
    loop {
        let factor = one() - aqk;
        if check_poles && factor.norm() < POLE_TOL {
            return Err(Error::PoleHit {
                detail: format!("infinite-product factor (1 - {alpha} q^{k}) vanishes"),
            });
        }
        prod *= factor;
        aqk *= q;
        k += 1;
        if aqk.norm() < PRODUCT_CUTOFF && k >= min_depth {
            break;
        }
    }
    Ok(prod)
}

/// The q-shifted factorial (alpha; q)_n for any signed or infinite order.
///
/// n = 0 is the empty product; negative n uses the reciprocal form
/// 1 / prod_{k=1}^{-n} (1 - alpha q^{-k}).
pub fn q_pochhammer(alpha: Complex64, q: Complex64, n: PochhammerOrder) -> Result<Complex64> {
    match n {
        PochhammerOrder::Infinity => pochhammer_inf(alpha, q, false),
        PochhammerOrder::Finite(n) if n == 0 => Ok(one()),
        PochhammerOrder::Finite(n) if n > 0 => {
            let mut prod = one();
            let mut aqk = alpha;
            for _ in 0..n {
                prod *= one() - aqk;
                aqk *= q;
            }
            Ok(prod)
        }
        PochhammerOrder::Finite(n) => {
            if q.norm() == 0.0 {
                return Err(Error::InvalidArgument(
                    "negative-order Pochhammer requires q != 0".into(),
                ));
            }
            let qinv = one() / q;
            let mut denom = one();
            let mut aqk = alpha * qinv;
            for k in 1..=(-n) {
                let factor = one() - aqk;
                if factor.norm() < POLE_TOL {
                    return Err(Error::DivisionByZeroFactor { index: k });
                }
                denom *= factor;
                aqk *= qinv;
            }
            Ok(one() / denom)
        }
    }
}

/// Both sides of the ratio identity (1-alpha)/(1-alpha q^n) =
/// (alpha; q)_n / (alpha q; q)_n, returned as (lhs, rhs) for callers to
/// assert equality.
pub fn q_pochhammer_ratio_identity_check(
    alpha: Complex64,
    q: Complex64,
    n: i64,
) -> Result<(Complex64, Complex64)> {
    let qn = q.powi(n as i32);
    let lhs_den = one() - alpha * qn;
    if lhs_den.norm() < POLE_TOL {
        return Err(Error::DivisionByZeroFactor { index: n });
    }
    let lhs = (one() - alpha) / lhs_den;
    let num = q_pochhammer(alpha, q, PochhammerOrder::Finite(n))?;
    let den = q_pochhammer(alpha * q, q, PochhammerOrder::Finite(n))?;
    // Individual factors are pole-guarded inside q_pochhammer; a small
    // product of healthy factors is legitimate, only underflow to zero is not.
    if den.norm() == 0.0 {
        return Err(Error::DivisionByZeroFactor { index: n });
    }
    Ok((lhs, num / den))
}

fn check_psi11_region(alpha: Complex64, beta: Complex64, q: Complex64, z: Complex64) -> Result<()> {
    let qn = q.norm();
    if qn >= 1.0 {
        return Err(Error::DivergentProduct { modulus: qn });
    }
    if alpha.norm() == 0.0 {
        return Err(Error::InvalidArgument("1psi1 requires alpha != 0".into()));
    }
    let lower = (beta / alpha).norm();
    let zn = z.norm();
    if !(lower < zn && zn < 1.0) {
        return Err(Error::ConvergenceRegionViolated {
            detail: format!("need |beta/alpha| = {lower} < |z| = {zn} < 1"),
        });
    }
    Ok(())
}

/// Symmetric partial sum of the bilateral series
/// 1ψ1(alpha; beta; q; z) = sum_n (alpha; q)_n / (beta; q)_n z^n
/// over n = -N..N, with N taken from `trunc.series_half_width`.
pub fn psi11(
    alpha: Complex64,
    beta: Complex64,
    q: Complex64,
    z: Complex64,
    trunc: &TruncationSpec,
) -> Result<Complex64> {
    check_psi11_region(alpha, beta, q, z)?;
    let n = trunc.series_half_width as i64;
    let mut sum = one(); // n = 0 term
    // Upward: t_{k+1} = t_k * (1 - alpha q^k) / (1 - beta q^k) * z.
    let mut term = one();
    let mut qk = one();
    for k in 0..n {
        let den = one() - beta * qk;
        if den.norm() < POLE_TOL {
            return Err(Error::PoleHit {
                detail: format!("(beta; q)_n factor vanishes at k = {k}"),
            });
        }
        term *= (one() - alpha * qk) / den * z;
        qk *= q;
        sum += term;
    }
    // Downward: t_{-m} = t_{-(m-1)} * (1 - beta q^{-m}) / ((1 - alpha q^{-m}) z).
    let qinv = one() / q;
    let mut term = one();
    let mut qmk = qinv;
    for m in 1..=n {
        let den = (one() - alpha * qmk) * z;
        if den.norm() < POLE_TOL {
            return Err(Error::DivisionByZeroFactor { index: m });
        }
        term *= (one() - beta * qmk) / den;
        qmk *= qinv;
        sum += term;
    }
    Ok(sum)
}

/// Ramanujan's 1ψ1 summation: the closed-form ratio of eight infinite
/// q-Pochhammer products, valid for |beta/alpha| < |z| < 1.
pub fn ramanujan_sum(
    alpha: Complex64,
    beta: Complex64,
    q: Complex64,
    z: Complex64,
) -> Result<Complex64> {
    check_psi11_region(alpha, beta, q, z)?;
    if z.norm() == 0.0 {
        return Err(Error::InvalidArgument("ramanujan_sum requires z != 0".into()));
    }
    let az = alpha * z;
    let num = pochhammer_inf(az, q, false)?
        * pochhammer_inf(q / az, q, false)?
        * pochhammer_inf(beta / alpha, q, false)?
        * pochhammer_inf(q, q, false)?;
    let den = pochhammer_inf(z, q, true)?
        * pochhammer_inf(beta / az, q, true)?
        * pochhammer_inf(q / alpha, q, true)?
        * pochhammer_inf(beta, q, true)?;
    Ok(num / den)
}

/// Cauchy's formula: the beta = alpha q special case of Ramanujan's sum,
/// sum_n z^n / (1 - alpha q^n) as a ratio of infinite products.
/// Symmetric in alpha and z.
pub fn cauchy_sum(alpha: Complex64, q: Complex64, z: Complex64) -> Result<Complex64> {
    let qn = q.norm();
    if qn >= 1.0 {
        return Err(Error::DivergentProduct { modulus: qn });
    }
    let zn = z.norm();
    if !(qn < zn && zn < 1.0) {
        return Err(Error::ConvergenceRegionViolated {
            detail: format!("need |q| = {qn} < |z| = {zn} < 1"),
        });
    }
    if alpha.norm() == 0.0 || zn == 0.0 {
        return Err(Error::InvalidArgument("cauchy_sum requires alpha, z != 0".into()));
    }
    let az = alpha * z;
    let qq = pochhammer_inf(q, q, false)?;
    let num = pochhammer_inf(az, q, false)? * pochhammer_inf(q / az, q, false)? * qq * qq;
    let den = pochhammer_inf(z, q, true)?
        * pochhammer_inf(q / z, q, true)?
        * pochhammer_inf(alpha, q, true)?
        * pochhammer_inf(q / alpha, q, true)?;
    Ok(num / den)
}

/// The q-gamma function (q; q)_inf / (q^x; q)_inf (1-q)^{1-x} for real
/// 0 < q < 1 and complex x. Complex powers use the real natural log of the
/// positive bases q and 1-q (principal determination).
pub fn q_gamma(x: Complex64, q: f64) -> Result<Complex64> {
    if !(0.0 < q && q < 1.0) {
        return Err(Error::InvalidArgument(format!("q_gamma requires 0 < q < 1, got {q}")));
    }
    let qc = Complex64::new(q, 0.0);
    let qx = (x * q.ln()).exp();
    let den = pochhammer_inf(qx, qc, true)?;
    let num = pochhammer_inf(qc, qc, false)?;
    let scale = ((one() - x) * (1.0 - q).ln()).exp();
    Ok(num / den * scale)
}

/// The modified Jacobi theta function (x; q)_inf (q/x; q)_inf for real
/// 0 < q < 1 and complex x != 0. A genuine zero of either product is a
/// legitimate value here, not a pole.
pub fn theta_fn(x: Complex64, q: f64) -> Result<Complex64> {
    if !(0.0 < q && q < 1.0) {
        return Err(Error::InvalidArgument(format!("theta_fn requires 0 < q < 1, got {q}")));
    }
    if x.norm() == 0.0 {
        return Err(Error::InvalidArgument("theta_fn requires x != 0".into()));
    }
    let qc = Complex64::new(q, 0.0);
    Ok(pochhammer_inf(x, qc, false)? * pochhammer_inf(qc / x, qc, false)?)
}
