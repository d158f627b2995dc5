//! Candidate quintuples `(γ, α, φ, β, c)` of time functions.
//!
//! A candidate packages five C¹ time functions with closed-form derivatives,
//! a validity window in `t`, and the free parameters it was built from. The
//! catalog covers the classical gradient-estimate families (Li-Yau, Davies,
//! Li-Xu, linear Li-Xu, Hamilton) for the linear heat equation, the
//! logarithmic equation `∂ₜu = Δu + a·u·ln u` including its sharp families,
//! and the power-nonlinearity cases that need a solution bound `M`.
//!
//! Singular pieces (`coth`, `1/(1-e^{-at})`, the exponential Li-Xu α) are
//! evaluated through `expm1`-based rewrites; the naive forms lose every digit
//! near `t = 0`.

mod heat;
mod log;
mod tabulated;
mod yamabe;
pub mod catalog;

pub use heat::{make_heat_family, HeatKind};
pub use log::{make_log_family, LogKind};
pub use tabulated::{tabulated_candidate, TabSample};
pub use yamabe::{make_yamabe_family, YamabeFlavor, YamabeKind};

use crate::time_fn::{BoxedTimeFn, TDomain};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("{family}: {constraint}")]
    OutOfRange { family: String, constraint: String },
    #[error("unknown catalog id `{0}`")]
    UnknownId(String),
    #[error("catalog id `{id}` needs parameter `{key}`")]
    MissingParam { id: String, key: String },
    #[error("tabulated candidate: {0}")]
    BadTable(String),
    #[error("building l(t) failed: {0}")]
    LBuild(String),
}

pub(crate) fn reject(family: &str, constraint: &str) -> ConstructError {
    ConstructError::OutOfRange { family: family.into(), constraint: constraint.into() }
}

/// Values and derivatives of a candidate at one time.
#[derive(Clone, Copy, Debug)]
pub struct CandValues {
    pub gamma: f64,
    pub dgamma: f64,
    pub alpha: f64,
    pub dalpha: f64,
    pub phi: f64,
    pub dphi: f64,
    pub beta: Option<(f64, f64)>,
    pub c: f64,
    pub dc: f64,
}

pub struct CandidateFunctions {
    pub name: String,
    pub gamma: BoxedTimeFn,
    pub alpha: BoxedTimeFn,
    pub phi: BoxedTimeFn,
    pub beta: Option<BoxedTimeFn>,
    pub c: BoxedTimeFn,
    pub t_domain: TDomain,
    /// Free parameters the entry was built from, echoed into reports.
    pub param_meta: BTreeMap<String, f64>,
    /// Interpolated rather than closed-form; the checker widens tolerances.
    pub tabulated: bool,
    /// Entry whose parameter domain the source leaves unstated.
    pub experimental: bool,
    /// Systems/branches the entry is expected to satisfy, e.g. "A3/I", "A2".
    pub designated: Vec<String>,
}

impl CandidateFunctions {
    pub fn values(&self, t: f64) -> CandValues {
        let (gamma, dgamma) = self.gamma.eval(t);
        let (alpha, dalpha) = self.alpha.eval(t);
        let (phi, dphi) = self.phi.eval(t);
        let (c, dc) = self.c.eval(t);
        let beta = self.beta.as_ref().map(|b| b.eval(t));
        CandValues { gamma, dgamma, alpha, dalpha, phi, dphi, beta, c, dc }
    }

    pub(crate) fn meta(pairs: &[(&str, f64)]) -> BTreeMap<String, f64> {
        pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
    }
}

// ---------------------------------------------------------------------------
// Shared stable primitives
// ---------------------------------------------------------------------------

/// `coth(x) + 1 = 2/(1 - e^{-2x})` and its x-derivative, stable for x > 0.
pub(crate) fn coth_plus_one(x: f64) -> (f64, f64) {
    let em = (-2.0 * x).exp_m1(); // e^{-2x} - 1 < 0
    let val = -2.0 / em;
    let der = 4.0 * (-2.0 * x).exp() / (em * em) * (-1.0);
    (val, der)
}

/// `1/(1 - e^{-at})` and its t-derivative. Positive for every a ≠ 0, t > 0
/// in the combination `a/(1-e^{-at})`.
pub(crate) fn inv_one_minus_exp(a: f64, t: f64) -> (f64, f64) {
    let em = (-a * t).exp_m1(); // e^{-at} - 1
    let val = -1.0 / em;
    let der = -a * (-a * t).exp() / (em * em);
    (val, der)
}

/// `sinh(x)cosh(x) - x`, series-corrected for small x where the naive form
/// cancels to nothing.
pub(crate) fn sinhcosh_minus_x(x: f64) -> f64 {
    if x < 0.3 {
        // sinh(2x)/2 - x = sum_{k>=1} (2x)^{2k+1} / (2 (2k+1)!)
        let mut term = 2.0 * x;
        let mut sum = 0.0;
        let x2 = 4.0 * x * x;
        let mut fact = 1.0f64;
        for k in 1..=9 {
            term *= x2;
            fact *= ((2 * k) * (2 * k + 1)) as f64;
            sum += term / (2.0 * fact);
        }
        sum
    } else {
        0.5 * (2.0 * x).sinh() - x
    }
}

/// `x cosh(x) - sinh(x)`, same treatment.
pub(crate) fn xcosh_minus_sinh(x: f64) -> f64 {
    if x < 0.3 {
        // sum_{k>=1} x^{2k+1} (1/(2k)! - 1/(2k+1)!)
        let mut pow = x;
        let x2 = x * x;
        let mut sum = 0.0;
        let mut fact = 1.0f64; // (2k)!
        for k in 1..=9 {
            pow *= x2;
            fact *= ((2 * k - 1) * (2 * k)) as f64;
            let inv2k = 1.0 / fact;
            let inv2k1 = inv2k / (2 * k + 1) as f64;
            sum += pow * (inv2k - inv2k1);
        }
        sum
    } else {
        x * x.cosh() - x.sinh()
    }
}

/// Li-Xu shape `α(x) = 1 + (sinh x cosh x - x)/sinh²x` at `x = s·t`,
/// with derivative in t. Increases from 1 at 0⁺ to 2 at ∞.
pub(crate) fn lixu_sinh_alpha(s: f64) -> BoxedTimeFn {
    Box::new(move |t: f64| {
        let x = s * t;
        if x > 350.0 {
            return (2.0, 0.0);
        }
        let sh = x.sinh();
        let val = 1.0 + sinhcosh_minus_x(x) / (sh * sh);
        // α'(x) = 2 (x cosh x - sinh x)/sinh³x
        let der = s * 2.0 * xcosh_minus_sinh(x) / (sh * sh * sh);
        (val, der)
    })
}

/// Exponential Li-Xu shape: with rate `C > 0` and companion `A` (`A ≠ 0`,
/// `C + A > 0`),
///
/// `α(t) = (2C/(C+A)) · N/D`,  `N = e^{Ct} - 1 + C(e^{-At} - 1)/A`,
/// `D = e^{Ct} + e^{-Ct} - 2`.
///
/// Covers the log-equation forms with `(C, A) = (a+2K, a)` and
/// `(2K-a, a)`, and the bounded-solution forms with `A = M`.
/// Increases from 1 at 0⁺ to `2C/(C+A)` at ∞.
pub(crate) fn lixu_exp_alpha(c_rate: f64, a_comp: f64) -> BoxedTimeFn {
    use crate::dd::{prod, Dd};
    let pref = 2.0 * c_rate / (c_rate + a_comp);
    Box::new(move |t: f64| {
        let (c, a) = (c_rate, a_comp);
        if c * t < 30.0 {
            let n = (c * t).exp_m1() + c * (-a * t).exp_m1() / a;
            let d = (c * t).exp_m1() + (-c * t).exp_m1();
            let np = c * ((c * t).exp() - (-a * t).exp());
            let dp = c * ((c * t).exp() - (-c * t).exp());
            // N'D - ND' cancels two orders in t; combine compensated.
            let q = prod(np, d).sub(prod(n, dp)).value();
            (pref * n / d, pref * q / (d * d))
        } else {
            // Multiply numerator and denominator by e^{-Ct}.
            let ect = (-c * t).exp();
            let eat = ((-a - c) * t).exp();
            let n = 1.0 - ect + c * (eat - ect) / a;
            let d = {
                let one_m = -(-c * t).exp_m1();
                one_m * one_m
            };
            let np = c * ect + (c / a) * (c * ect - (a + c) * eat);
            let dp = 2.0 * (1.0 - ect) * c * ect;
            let q = Dd::from(np).mul(Dd::from(d)).sub(Dd::from(n).mul(Dd::from(dp))).value();
            (pref * n / d, pref * q / (d * d))
        }
    })
}

/// tanh(s·t) with derivative in t.
pub(crate) fn tanh_beta(s: f64) -> BoxedTimeFn {
    Box::new(move |t: f64| {
        let x = s * t;
        let c = x.cosh();
        if x > 350.0 {
            (1.0, 0.0)
        } else {
            (x.tanh(), s / (c * c))
        }
    })
}

/// Wrap a time function in a constant factor.
pub(crate) fn scaled(inner: BoxedTimeFn, factor: f64) -> BoxedTimeFn {
    Box::new(move |t: f64| {
        let (v, d) = inner.eval(t);
        (factor * v, factor * d)
    })
}
