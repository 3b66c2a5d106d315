//! Szegő kernel evaluators for the canonical annulus rho < |z| < 1 (two
//! bilateral series, an infinite product, and a theta / q-gamma closed
//! form), for general annuli via the affine transformation law, and for the
//! weighted kernel, plus zero-location utilities.

use std::f64::consts::{PI, TAU};
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qseries::{q_gamma, theta_fn, POLE_TOL};
use crate::TruncationSpec;

/// Slack allowed when testing |z| against the closed annulus [rho, 1].
const BOUNDARY_TOL: f64 = 1e-12;

/// The canonical annulus rho < |z| < 1 with the kernel's anchor point a.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnnulusDomain {
    rho: f64,
    a: Complex64,
}

impl AnnulusDomain {
    pub fn new(rho: f64, a: Complex64) -> Result<Self> {
        if !(0.0 < rho && rho < 1.0) {
            return Err(Error::InvalidArgument(format!("need 0 < rho < 1, got {rho}")));
        }
        let an = a.norm();
        if !(rho < an && an < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "anchor must lie in the annulus: rho = {rho} < |a| = {an} < 1"
            )));
        }
        Ok(Self { rho, a })
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }
}

/// A general annulus r2 < |z - z0| < r1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralAnnulusDomain {
    z0: Complex64,
    r1: f64,
    r2: f64,
    a: Complex64,
}

impl GeneralAnnulusDomain {
    pub fn new(z0: Complex64, r1: f64, r2: f64, a: Complex64) -> Result<Self> {
        if !(0.0 < r2 && r2 < r1) {
            return Err(Error::InvalidArgument(format!("need 0 < r2 < r1, got r2 = {r2}, r1 = {r1}")));
        }
        let an = (a - z0).norm();
        if !(r2 < an && an < r1) {
            return Err(Error::InvalidArgument(format!(
                "anchor must lie in the annulus: r2 = {r2} < |a - z0| = {an} < r1 = {r1}"
            )));
        }
        Ok(Self { z0, r1, r2, a })
    }

    /// The canonical annulus this domain maps onto under z -> (z - z0)/r1.
    pub fn canonical(&self) -> Result<AnnulusDomain> {
        AnnulusDomain::new(self.r2 / self.r1, (self.a - self.z0) / self.r1)
    }

    /// Location of the kernel's single zero, z0 - r1 r2 / conj(a - z0).
    pub fn zero_location(&self) -> Complex64 {
        self.z0 - self.r1 * self.r2 / (self.a - self.z0).conj()
    }
}

/// Parameters of the weighted kernel sum (a z̄)^n / (1 + t rho^{2n}).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedKernelParams {
    rho: f64,
    a: Complex64,
    t: f64,
}

impl WeightedKernelParams {
    pub fn new(rho: f64, a: Complex64, t: f64) -> Result<Self> {
        if t <= 0.0 {
            return Err(Error::InvalidArgument(format!("weight must satisfy t > 0, got {t}")));
        }
        let dom = AnnulusDomain::new(rho, a)?;
        Ok(Self { rho: dom.rho, a: dom.a, t })
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn domain(&self) -> AnnulusDomain {
        AnnulusDomain { rho: self.rho, a: self.a }
    }
}

/// Exponents of the theta / q-gamma closed forms, all in base q = rho^2.
/// With t = rho both mu and nu collapse to lambda.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormExponents {
    pub lambda: Complex64,
    pub mu: Complex64,
    pub nu: Complex64,
}

impl ClosedFormExponents {
    pub fn new(rho: f64, t: f64) -> Self {
        let lr = rho.ln();
        Self {
            lambda: Complex64::new(0.5, PI / (2.0 * lr)),
            mu: Complex64::new(t.ln(), PI) / (2.0 * lr),
            nu: Complex64::new(1.0, 0.0) + Complex64::new(-t.ln(), PI) / (2.0 * lr),
        }
    }
}

/// Which representation of the kernel to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Series4,
    Series5,
    Product21,
    Closed30,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Series4, Method::Series5, Method::Product21, Method::Closed30];

    pub fn name(&self) -> &'static str {
        match self {
            Method::Series4 => "series4",
            Method::Series5 => "series5",
            Method::Product21 => "product",
            Method::Closed30 => "closed",
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "series4" => Ok(Method::Series4),
            "series5" => Ok(Method::Series5),
            "product" => Ok(Method::Product21),
            "closed" => Ok(Method::Closed30),
            other => Err(Error::InvalidArgument(format!(
                "unknown method '{other}' (expected series4|series5|product|closed)"
            ))),
        }
    }
}

/// Bilateral series (1/2π) Σ (z ā)^n / (1 + rho^{2n+1}), n = -N..N.
/// Valid for rho <= |z| <= 1.
pub fn eval_series_eq4(dom: &AnnulusDomain, z: Complex64, trunc: &TruncationSpec) -> Result<Complex64> {
    let zn = z.norm();
    if zn < dom.rho - BOUNDARY_TOL || zn > 1.0 + BOUNDARY_TOL {
        return Err(Error::DomainViolation {
            detail: format!("series (4) needs rho <= |z| <= 1, got |z| = {zn}"),
        });
    }
    let w = dom.a.conj() * z;
    let rho = dom.rho;
    let n = trunc.series_half_width;
    let mut sum = Complex64::new(1.0 / (1.0 + rho), 0.0);
    let winv = Complex64::new(1.0, 0.0) / w;
    let mut wp = Complex64::new(1.0, 0.0);
    let mut wm = Complex64::new(1.0, 0.0);
    let mut rp = rho; // becomes rho^{2k+1}
    let mut rm = rho; // becomes rho^{-2k+1}
    let rho2 = rho * rho;
    for _ in 1..=n {
        wp *= w;
        wm *= winv;
        rp *= rho2;
        rm /= rho2;
        sum += wp / (1.0 + rp);
        // For the negative tail 1 + rho^{-2k+1} may overflow; the term then
        // correctly flushes to zero.
        let denom = 1.0 + rm;
        if denom.is_finite() {
            sum += wm / denom;
        }
    }
    Ok(sum / TAU)
}

/// Bilateral series (1/2π) Σ (-1)^n rho^n / (rho^{2n} - z ā), n = -N..N.
/// Requires rho^2 < |z ā| so both tails decay.
pub fn eval_series_eq5(dom: &AnnulusDomain, z: Complex64, trunc: &TruncationSpec) -> Result<Complex64> {
    let w = dom.a.conj() * z;
    let rho = dom.rho;
    let rho2 = rho * rho;
    if w.norm() <= rho2 {
        return Err(Error::ConvergenceRegionViolated {
            detail: format!("series (5) needs rho^2 = {rho2} < |z a\u{304}| = {}", w.norm()),
        });
    }
    let n = trunc.series_half_width;
    let d0 = Complex64::new(1.0, 0.0) - w;
    if d0.norm() < POLE_TOL {
        return Err(Error::PoleHit { detail: "series (5) denominator vanishes at n = 0".into() });
    }
    let mut sum = Complex64::new(1.0, 0.0) / d0;
    let mut sign = 1.0;
    let mut rp = 1.0; // rho^k
    let mut r2p = 1.0; // rho^{2k}
    for k in 1..=n {
        sign = -sign;
        rp *= rho;
        r2p *= rho2;
        // n = +k term, written directly.
        let dp = Complex64::new(r2p, 0.0) - w;
        if dp.norm() < POLE_TOL {
            return Err(Error::PoleHit { detail: format!("series (5) denominator vanishes at n = {k}") });
        }
        sum += sign * rp / dp;
        // n = -k term, rewritten as (-1)^k rho^k / (1 - w rho^{2k}) to stay
        // finite for large k.
        let dm = Complex64::new(1.0, 0.0) - w * r2p;
        if dm.norm() < POLE_TOL {
            return Err(Error::PoleHit { detail: format!("series (5) denominator vanishes at n = -{k}") });
        }
        sum += sign * rp / dm;
    }
    Ok(sum / TAU)
}

/// Infinite product representation truncated at depth P:
/// (1/2π) Π_{n=0}^{P} (1 + āz rho^{2n+1})(āz + rho^{2n+1})(1 - rho^{2n+2})^2
///                  / (1 - āz rho^{2n})(āz - rho^{2n+2})(1 + rho^{2n+1})^2.
/// Meaningful for all z away from the pole lattice, including outside the
/// annulus.
pub fn eval_product_eq21(dom: &AnnulusDomain, z: Complex64, trunc: &TruncationSpec) -> Result<Complex64> {
    let w = dom.a.conj() * z;
    let rho = dom.rho;
    let rho2 = rho * rho;
    let mut prod = Complex64::new(1.0, 0.0);
    let mut r2n = 1.0; // rho^{2n}
    for n in 0..=trunc.product_depth {
        let r2n1 = r2n * rho;
        let r2n2 = r2n * rho2;
        let d1 = Complex64::new(1.0, 0.0) - w * r2n;
        let d2 = w - r2n2;
        if d1.norm() < POLE_TOL || d2.norm() < POLE_TOL {
            return Err(Error::PoleHit {
                detail: format!("product (21) denominator vanishes at n = {n}"),
            });
        }
        let num = (Complex64::new(1.0, 0.0) + w * r2n1) * (w + r2n1) * (1.0 - r2n2) * (1.0 - r2n2);
        let den = d1 * d2 * (1.0 + r2n1) * (1.0 + r2n1);
        prod *= num / den;
        r2n *= rho2;
    }
    Ok(prod / TAU)
}

/// Closed form [Γ_{rho^2}(λ)]^2 / (2π (1-rho^2)^{2(1-λ)}) ·
/// θ(-rho āz; rho^2) / θ(āz; rho^2) with λ = 1/2 + iπ/(2 ln rho).
pub fn eval_closed_form_eq30(dom: &AnnulusDomain, z: Complex64) -> Result<Complex64> {
    let rho = dom.rho;
    let q = rho * rho;
    let w = dom.a.conj() * z;
    let lambda = ClosedFormExponents::new(rho, rho).lambda;
    let gamma = q_gamma(lambda, q)?;
    let two = Complex64::new(2.0, 0.0);
    let scale = ((two - two * lambda) * (1.0 - q).ln()).exp();
    let num = theta_fn(-rho * w, q)?;
    let den = theta_fn(w, q)?;
    if den.norm() < POLE_TOL {
        return Err(Error::PoleHit { detail: "theta(a\u{304}z; rho^2) vanishes".into() });
    }
    Ok(gamma * gamma / (TAU * scale) * num / den)
}

/// The kernel's single zero inside the annulus, -rho / conj(a).
pub fn zero_location(dom: &AnnulusDomain) -> Complex64 {
    -dom.rho / dom.a.conj()
}

/// Evaluate the canonical-annulus kernel by the chosen method.
pub fn eval_canonical(
    dom: &AnnulusDomain,
    z: Complex64,
    method: Method,
    trunc: &TruncationSpec,
) -> Result<Complex64> {
    match method {
        Method::Series4 => eval_series_eq4(dom, z, trunc),
        Method::Series5 => eval_series_eq5(dom, z, trunc),
        Method::Product21 => eval_product_eq21(dom, z, trunc),
        Method::Closed30 => eval_closed_form_eq30(dom, z),
    }
}

/// Kernel of a general annulus via the affine transformation law
/// S2(z, a) = (1/r1) S((z - z0)/r1, (a - z0)/r1) with rho = r2/r1.
pub fn eval_general_annulus(
    dom: &GeneralAnnulusDomain,
    z: Complex64,
    method: Method,
    trunc: &TruncationSpec,
) -> Result<Complex64> {
    let canonical = dom.canonical()?;
    let mapped = (z - dom.z0) / dom.r1;
    Ok(eval_canonical(&canonical, mapped, method, trunc)? / dom.r1)
}

/// Weighted kernel series (1/2π) Σ (āz)^n / (1 + t rho^{2n}), n = -N..N.
/// Requires rho^2 < |āz| < 1.
pub fn eval_weighted_series_eq37(
    par: &WeightedKernelParams,
    z: Complex64,
    trunc: &TruncationSpec,
) -> Result<Complex64> {
    let w = par.a.conj() * z;
    let rho = par.rho;
    let rho2 = rho * rho;
    let wn = w.norm();
    if !(rho2 < wn && wn < 1.0) {
        return Err(Error::ConvergenceRegionViolated {
            detail: format!("weighted series needs rho^2 = {rho2} < |a\u{304}z| = {wn} < 1"),
        });
    }
    let t = par.t;
    let n = trunc.series_half_width;
    let mut sum = Complex64::new(1.0 / (1.0 + t), 0.0);
    let winv = Complex64::new(1.0, 0.0) / w;
    let mut wp = Complex64::new(1.0, 0.0);
    let mut wm = Complex64::new(1.0, 0.0);
    let mut rp = 1.0;
    let mut rm = 1.0;
    for _ in 1..=n {
        wp *= w;
        wm *= winv;
        rp *= rho2;
        rm /= rho2;
        sum += wp / (1.0 + t * rp);
        let denom = 1.0 + t * rm;
        if denom.is_finite() {
            sum += wm / denom;
        }
    }
    Ok(sum / TAU)
}

/// Weighted kernel infinite product truncated at depth P:
/// (1/2π) Π (1 + t āz rho^{2n})(āz + rho^{2n+2}/t)(1 - rho^{2n+2})^2
///         / (1 - āz rho^{2n})(āz - rho^{2n+2})(1 + rho^{2n+2}/t)(1 + t rho^{2n}).
pub fn eval_weighted_product_eq38(
    par: &WeightedKernelParams,
    z: Complex64,
    trunc: &TruncationSpec,
) -> Result<Complex64> {
    let w = par.a.conj() * z;
    let rho = par.rho;
    let rho2 = rho * rho;
    let t = par.t;
    let mut prod = Complex64::new(1.0, 0.0);
    let mut r2n = 1.0;
    for n in 0..=trunc.product_depth {
        let r2n2 = r2n * rho2;
        let d1 = Complex64::new(1.0, 0.0) - w * r2n;
        let d2 = w - r2n2;
        if d1.norm() < POLE_TOL || d2.norm() < POLE_TOL {
            return Err(Error::PoleHit {
                detail: format!("weighted product denominator vanishes at n = {n}"),
            });
        }
        let num = (Complex64::new(1.0, 0.0) + t * w * r2n) * (w + r2n2 / t) * (1.0 - r2n2) * (1.0 - r2n2);
        let den = d1 * d2 * (1.0 + r2n2 / t) * (1.0 + t * r2n);
        prod *= num / den;
        r2n *= rho2;
    }
    Ok(prod / TAU)
}

/// Weighted closed form Γ_{rho^2}(μ) Γ_{rho^2}(ν) / (2π (1-rho^2)^{2-μ-ν}) ·
/// θ(-t āz; rho^2) / θ(āz; rho^2).
pub fn eval_weighted_closed_form_eq42(par: &WeightedKernelParams, z: Complex64) -> Result<Complex64> {
    let rho = par.rho;
    let q = rho * rho;
    let w = par.a.conj() * z;
    let exps = ClosedFormExponents::new(rho, par.t);
    let gammas = q_gamma(exps.mu, q)? * q_gamma(exps.nu, q)?;
    let scale = ((Complex64::new(2.0, 0.0) - exps.mu - exps.nu) * (1.0 - q).ln()).exp();
    let num = theta_fn(-par.t * w, q)?;
    let den = theta_fn(w, q)?;
    if den.norm() < POLE_TOL {
        return Err(Error::PoleHit { detail: "theta(a\u{304}z; rho^2) vanishes".into() });
    }
    Ok(gammas / (TAU * scale) * num / den)
}

/// The weighted kernel has a zero in the annulus only for weights of the
/// form t = rho^{±(2m+1)}; in that case the zero sits at -rho / conj(a).
/// The exponent test allows 1e-10 of slack.
pub fn weighted_zero_condition(par: &WeightedKernelParams) -> Option<Complex64> {
    let exponent = par.t.ln() / par.rho.ln();
    let nearest = exponent.round();
    if (exponent - nearest).abs() < 1e-10 && (nearest as i64).rem_euclid(2) == 1 {
        Some(zero_location(&par.domain()))
    } else {
        None
    }
}
