//! The nonlinearity `H(u)` and its logarithmic reaction term.
//!
//! With `f = ln u` the equation `∂ₜu = Δu + H(u)` becomes
//! `∂ₜf = Δf + |∇f|² + h(f)` where `h(f) = H(e^f)·e^{-f}`. Three families
//! are supported:
//!
//! * `Linear { p }`:      `H(u) = p·u`,               `h(f) = p`
//! * `Logarithmic { a }`: `H(u) = a·u·ln u`,          `h(f) = a·f`
//! * `PowerSum { terms }`: `H(u) = Σ aᵢ·u^{pᵢ}`,      `h(f) = Σ aᵢ·e^{(pᵢ-1)f}`

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exponent clamp for `e^{(p-1)f}`; anything beyond overflows f64 anyway.
pub const EXP_CLAMP: f64 = 700.0;

#[derive(Debug, Error)]
pub enum EquationError {
    #[error("H(u) requires u > 0, got {0}")]
    NonpositiveU(f64),
    #[error("logarithmic coefficient a must be nonzero (a = 0 collapses to Linear)")]
    ZeroLogCoefficient,
    #[error("power sum needs at least one term")]
    EmptyPowerSum,
    #[error("power sum exponents must be strictly increasing")]
    UnsortedExponents,
    #[error("parameter out of range: {0}")]
    BadParameter(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EquationSpec {
    Linear { p: f64 },
    Logarithmic { a: f64 },
    PowerSum { terms: Vec<(f64, f64)> },
}

impl EquationSpec {
    pub fn linear(p: f64) -> EquationSpec {
        EquationSpec::Linear { p }
    }

    pub fn logarithmic(a: f64) -> Result<EquationSpec, EquationError> {
        let eq = EquationSpec::Logarithmic { a };
        eq.validate()?;
        Ok(eq)
    }

    /// Terms are `(aᵢ, pᵢ)` with strictly increasing exponents.
    pub fn power_sum(terms: Vec<(f64, f64)>) -> Result<EquationSpec, EquationError> {
        let eq = EquationSpec::PowerSum { terms };
        eq.validate()?;
        Ok(eq)
    }

    pub fn validate(&self) -> Result<(), EquationError> {
        match self {
            EquationSpec::Linear { .. } => Ok(()),
            EquationSpec::Logarithmic { a } => {
                if *a == 0.0 {
                    Err(EquationError::ZeroLogCoefficient)
                } else {
                    Ok(())
                }
            }
            EquationSpec::PowerSum { terms } => {
                if terms.is_empty() {
                    return Err(EquationError::EmptyPowerSum);
                }
                if terms.windows(2).any(|w| w[0].1 >= w[1].1) {
                    return Err(EquationError::UnsortedExponents);
                }
                Ok(())
            }
        }
    }

    /// `H(u)` for `u > 0`.
    pub fn big_h(&self, u: f64) -> Result<f64, EquationError> {
        if !(u > 0.0) {
            return Err(EquationError::NonpositiveU(u));
        }
        Ok(match self {
            EquationSpec::Linear { p } => p * u,
            EquationSpec::Logarithmic { a } => a * u * u.ln(),
            EquationSpec::PowerSum { terms } => {
                terms.iter().map(|&(ai, pi)| ai * u.powf(pi)).sum()
            }
        })
    }

    /// `h(f) = H(e^f)·e^{-f}`.
    pub fn h(&self, f: f64) -> f64 {
        match self {
            EquationSpec::Linear { p } => *p,
            EquationSpec::Logarithmic { a } => a * f,
            EquationSpec::PowerSum { terms } => terms
                .iter()
                .map(|&(ai, pi)| ai * clamped_exp((pi - 1.0) * f))
                .sum(),
        }
    }

    /// First derivative `h'(f)`.
    pub fn h1(&self, f: f64) -> f64 {
        match self {
            EquationSpec::Linear { .. } => 0.0,
            EquationSpec::Logarithmic { a } => *a,
            EquationSpec::PowerSum { terms } => terms
                .iter()
                .map(|&(ai, pi)| ai * (pi - 1.0) * clamped_exp((pi - 1.0) * f))
                .sum(),
        }
    }

    /// Second derivative `h''(f)`.
    pub fn h2(&self, f: f64) -> f64 {
        match self {
            EquationSpec::Linear { .. } => 0.0,
            EquationSpec::Logarithmic { .. } => 0.0,
            EquationSpec::PowerSum { terms } => terms
                .iter()
                .map(|&(ai, pi)| {
                    let q = pi - 1.0;
                    ai * q * q * clamped_exp(q * f)
                })
                .sum(),
        }
    }

    /// True if evaluating `h` at `f` engaged the exponent clamp. Reports carry
    /// this flag so a clamped check window is never silently trusted.
    pub fn clamped(&self, f: f64) -> bool {
        match self {
            EquationSpec::PowerSum { terms } => terms
                .iter()
                .any(|&(_, pi)| ((pi - 1.0) * f).abs() > EXP_CLAMP),
            _ => false,
        }
    }
}

fn clamped_exp(x: f64) -> f64 {
    x.clamp(-EXP_CLAMP, EXP_CLAMP).exp()
}

/// Curvature data for the ODE systems: `Ric ≥ -K` with effective dimension m.
/// `n` is the spatial dimension used by simulations and exact solutions.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct CurvatureParams {
    pub m: f64,
    pub k: f64,
    pub n: usize,
}

impl CurvatureParams {
    pub fn new(m: f64, k: f64, n: usize) -> Result<CurvatureParams, EquationError> {
        if !(m > 0.0) {
            return Err(EquationError::BadParameter(format!("m must be > 0, got {m}")));
        }
        if !(k >= 0.0) {
            return Err(EquationError::BadParameter(format!("K must be >= 0, got {k}")));
        }
        if n < 1 {
            return Err(EquationError::BadParameter("n must be >= 1".into()));
        }
        Ok(CurvatureParams { m, k, n })
    }

    /// Flat geometry with `m = n`, the setting of the sharp exact solutions.
    pub fn flat(n: usize) -> CurvatureParams {
        CurvatureParams { m: n as f64, k: 0.0, n }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn big_h_examples() {
        let lin = EquationSpec::linear(5.0);
        assert_eq!(lin.big_h(2.0).unwrap(), 10.0);
        let log = EquationSpec::logarithmic(2.0).unwrap();
        let e = std::f64::consts::E;
        assert!((log.big_h(e).unwrap() - 2.0 * e).abs() < 1e-12);
        let pow = EquationSpec::power_sum(vec![(1.0, 0.5)]).unwrap();
        assert!((pow.big_h(4.0).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn h_examples() {
        let log = EquationSpec::logarithmic(2.0).unwrap();
        assert_eq!((log.h(3.0), log.h1(3.0), log.h2(3.0)), (6.0, 2.0, 0.0));
        let lin = EquationSpec::linear(7.0);
        assert_eq!((lin.h(-4.0), lin.h1(-4.0), lin.h2(-4.0)), (7.0, 0.0, 0.0));
        let pow = EquationSpec::power_sum(vec![(1.0, 0.5)]).unwrap();
        assert_eq!((pow.h(0.0), pow.h1(0.0), pow.h2(0.0)), (1.0, -0.5, 0.25));
    }

    #[test]
    fn nonpositive_u_is_rejected() {
        let lin = EquationSpec::linear(1.0);
        assert!(lin.big_h(0.0).is_err());
        assert!(lin.big_h(-1.0).is_err());
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert!(EquationSpec::logarithmic(0.0).is_err());
        assert!(EquationSpec::power_sum(vec![]).is_err());
        assert!(EquationSpec::power_sum(vec![(1.0, 2.0), (1.0, 1.0)]).is_err());
        assert!(EquationSpec::power_sum(vec![(1.0, 1.0), (1.0, 1.0)]).is_err());
    }

    #[test]
    fn clamp_engages_for_extreme_exponents() {
        let pow = EquationSpec::power_sum(vec![(1.0, 101.0)]).unwrap();
        assert!(pow.clamped(8.0)); // (p-1)f = 800 > 700
        assert!(!pow.clamped(1.0));
        assert!(pow.h(8.0).is_finite());
    }

    fn arb_equation() -> impl Strategy<Value = EquationSpec> {
        prop_oneof![
            (-5.0f64..5.0).prop_map(EquationSpec::linear),
            (0.1f64..5.0).prop_map(|a| EquationSpec::Logarithmic { a }),
            (-5.0f64..-0.1).prop_map(|a| EquationSpec::Logarithmic { a }),
            (
                prop::collection::vec((-3.0f64..3.0, ()).prop_map(|(a, _)| a), 1..4),
                prop::collection::vec(-2.0f64..2.0, 1..4)
            )
                .prop_filter_map("needs sortable exponents", |(coefs, mut exps)| {
                    exps.sort_by(|a, b| a.partial_cmp(b).unwrap());
                    exps.dedup_by(|a, b| (*a - *b).abs() < 1e-6);
                    let n = coefs.len().min(exps.len());
                    if n == 0 {
                        return None;
                    }
                    let terms: Vec<_> =
                        coefs.iter().zip(&exps).take(n).map(|(&a, &p)| (a, p)).collect();
                    EquationSpec::power_sum(terms).ok()
                }),
        ]
    }

    proptest! {
        // h(f) agrees with H(e^f)·e^{-f} wherever e^f is representable.
        #[test]
        fn h_matches_big_h(eq in arb_equation(), f in -20.0f64..20.0) {
            let u = f.exp();
            let via_big_h = eq.big_h(u).unwrap() / u;
            let h = eq.h(f);
            let scale = h.abs().max(via_big_h.abs()).max(1e-300);
            prop_assert!((h - via_big_h).abs() <= 1e-12 * scale,
                "h={h}, H(e^f)e^-f={via_big_h}");
        }

        // h1, h2 agree with central differences of h.
        #[test]
        fn derivatives_match_finite_differences(eq in arb_equation(), f in -20.0f64..20.0) {
            let step = 1e-6;
            let fd1 = (eq.h(f + step) - eq.h(f - step)) / (2.0 * step);
            let fd2 = (eq.h1(f + step) - eq.h1(f - step)) / (2.0 * step);
            let tol1 = 1e-6 * eq.h1(f).abs().max(1.0);
            let tol2 = 1e-6 * eq.h2(f).abs().max(1.0);
            prop_assert!((eq.h1(f) - fd1).abs() <= tol1);
            prop_assert!((eq.h2(f) - fd2).abs() <= tol2);
        }
    }
}
