//! Candidate families for the linear equation `∂ₜu = Δu + p·u`.
//!
//! The reaction term is constant in f (`h' = h'' = 0`), so these entries
//! depend only on the curvature data `(m, K)` and the family parameter.

use super::*;
use crate::equations::CurvatureParams;
use crate::time_fn::{constant, TDomain};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum HeatKind {
    /// γ=1, α constant, β=t, φ = mα²/2t + mα²K/(4(α-1)). Needs α > 1
    /// (α = 1 is admitted when K = 0, where the singular term vanishes).
    LiYauDavies { alpha: f64 },
    /// γ=1, α = 1 + (sinh(Kt)cosh(Kt) - Kt)/sinh²(Kt), β = tanh(Kt),
    /// φ = c = (mK/2)(coth(Kt) + 1). Needs K > 0.
    LiXu,
    /// γ=1, α = 1 + 2Kt/3, β = tanh(Kt), φ = (m/2)(1/t + K + K²t/3),
    /// c = (m/2)(1/t + K). Needs K > 0.
    LinearLiXu,
    /// γ = δe^{-2Kt}, α=1, β=t, φ = c = m e^{2Kt}/(2δt), δ ∈ (0,1).
    Hamilton { delta: f64 },
}

pub fn make_heat_family(
    kind: HeatKind,
    params: &CurvatureParams,
) -> Result<CandidateFunctions, ConstructError> {
    let (m, k) = (params.m, params.k);
    match kind {
        HeatKind::LiYauDavies { alpha } => {
            if k > 0.0 && !(alpha > 1.0) {
                return Err(reject("heat.li_yau", "alpha > 1 required when K > 0"));
            }
            if !(alpha >= 1.0) {
                return Err(reject("heat.li_yau", "alpha >= 1 required"));
            }
            let designated = if alpha > 1.0 {
                vec!["A3/I".into(), "A2".into()]
            } else {
                // the α→1 sharp limit: branch I needs α − γ bounded away from 0
                vec!["A2".into()]
            };
            Ok(li_yau_shape(
                "heat.li_yau",
                m,
                alpha,
                if k > 0.0 { m * alpha * alpha * k / (4.0 * (alpha - 1.0)) } else { 0.0 },
                if k > 0.0 { m * alpha * k / (2.0 * (alpha - 1.0)) } else { 0.0 },
                CandidateFunctions::meta(&[("alpha", alpha), ("m", m), ("K", k)]),
                designated,
            ))
        }
        HeatKind::LiXu => {
            if !(k > 0.0) {
                return Err(reject("heat.li_xu", "K > 0 required"));
            }
            let pc = coth_family_phi(m, k);
            let pc2 = coth_family_phi(m, k);
            Ok(CandidateFunctions {
                name: "heat.li_xu".into(),
                gamma: constant(1.0),
                alpha: lixu_sinh_alpha(k),
                phi: pc,
                beta: Some(tanh_beta(k)),
                c: pc2,
                t_domain: TDomain::positive(),
                param_meta: CandidateFunctions::meta(&[
                    ("m", m),
                    ("K", k),
                    ("phi_t_limit", m / 2.0),
                ]),
                tabulated: false,
                experimental: false,
                designated: vec!["A3/II".into(), "A3/III".into(), "A2".into()],
            })
        }
        HeatKind::LinearLiXu => {
            if !(k > 0.0) {
                return Err(reject("heat.linear_li_xu", "K > 0 required"));
            }
            Ok(CandidateFunctions {
                name: "heat.linear_li_xu".into(),
                gamma: constant(1.0),
                alpha: Box::new(move |t: f64| (1.0 + 2.0 * k * t / 3.0, 2.0 * k / 3.0)),
                phi: Box::new(move |t: f64| {
                    (
                        m / 2.0 * (1.0 / t + k + k * k * t / 3.0),
                        m / 2.0 * (-1.0 / (t * t) + k * k / 3.0),
                    )
                }),
                beta: Some(tanh_beta(k)),
                c: Box::new(move |t: f64| (m / 2.0 * (1.0 / t + k), -m / (2.0 * t * t))),
                t_domain: TDomain::positive(),
                param_meta: CandidateFunctions::meta(&[
                    ("m", m),
                    ("K", k),
                    ("phi_t_limit", m / 2.0),
                ]),
                tabulated: false,
                experimental: false,
                designated: vec!["A3/II".into(), "A3/III".into(), "A2".into()],
            })
        }
        HeatKind::Hamilton { delta } => {
            if !(delta > 0.0 && delta < 1.0) {
                return Err(reject("heat.hamilton", "delta in (0,1) required"));
            }
            let pc = hamilton_phi(m, k, delta, 0.0, 1.0);
            let pc2 = hamilton_phi(m, k, delta, 0.0, 1.0);
            Ok(CandidateFunctions {
                name: "heat.hamilton".into(),
                gamma: hamilton_gamma(k, delta),
                alpha: constant(1.0),
                phi: pc,
                beta: Some(Box::new(|t: f64| (t, 1.0))),
                c: pc2,
                t_domain: TDomain::positive(),
                param_meta: CandidateFunctions::meta(&[
                    ("delta", delta),
                    ("m", m),
                    ("K", k),
                    ("phi_t_limit", m / (2.0 * delta)),
                ]),
                tabulated: false,
                experimental: false,
                designated: vec!["A3/I".into(), "A2".into()],
            })
        }
    }
}

/// γ=1, α const, β=t, φ = mα²/2t + phi_const, c = mα/2t + c_const.
pub(crate) fn li_yau_shape(
    name: &str,
    m: f64,
    alpha: f64,
    phi_const: f64,
    c_const: f64,
    mut meta: BTreeMap<String, f64>,
    designated: Vec<String>,
) -> CandidateFunctions {
    let pa = m * alpha * alpha / 2.0;
    let ca = m * alpha / 2.0;
    meta.insert("phi_t_limit".into(), pa);
    CandidateFunctions {
        name: name.into(),
        gamma: constant(1.0),
        alpha: constant(alpha),
        phi: Box::new(move |t: f64| (pa / t + phi_const, -pa / (t * t))),
        beta: Some(Box::new(|t: f64| (t, 1.0))),
        c: Box::new(move |t: f64| (ca / t + c_const, -ca / (t * t))),
        t_domain: TDomain::positive(),
        param_meta: meta,
        tabulated: false,
        experimental: false,
        designated,
    }
}

/// φ = c = (m s / 2)(coth(st) + 1), the Li-Xu right-hand side at rate s.
pub(crate) fn coth_family_phi(m: f64, s: f64) -> BoxedTimeFn {
    Box::new(move |t: f64| {
        let (v, dx) = coth_plus_one(s * t);
        (m / 2.0 * s * v, m / 2.0 * s * s * dx)
    })
}

pub(crate) fn hamilton_gamma(k: f64, delta: f64) -> BoxedTimeFn {
    Box::new(move |t: f64| {
        let g = delta * (-2.0 * k * t).exp();
        (g, -2.0 * k * g)
    })
}

/// φ or c of Hamilton shape: (m e^{2Kt} / (2δ)) · (scale/t + add).
pub(crate) fn hamilton_phi(m: f64, k: f64, delta: f64, add: f64, scale: f64) -> BoxedTimeFn {
    Box::new(move |t: f64| {
        let kappa = m * (2.0 * k * t).exp() / (2.0 * delta);
        let v = kappa * (scale / t + add);
        let d = kappa * (2.0 * k * (scale / t + add) - scale / (t * t));
        (v, d)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::candidates::test_support::assert_derivatives_consistent;

    fn params(m: f64, k: f64) -> CurvatureParams {
        CurvatureParams::new(m, k, 1).unwrap()
    }

    #[test]
    fn li_yau_values_at_t1() {
        // m=4, K=0, alpha=2: phi(1) = 8, c(1) = 4
        let c = make_heat_family(HeatKind::LiYauDavies { alpha: 2.0 }, &params(4.0, 0.0)).unwrap();
        let v = c.values(1.0);
        assert_eq!(v.phi, 8.0);
        assert_eq!(v.c, 4.0);
        assert_eq!(v.gamma, 1.0);
        assert_eq!(v.beta.unwrap().0, 1.0);
    }

    #[test]
    fn hamilton_values() {
        // m=4, K=0, delta=0.5, t=2: gamma = 0.5, phi = c = 4/(2*0.5*2) = 2
        let c = make_heat_family(HeatKind::Hamilton { delta: 0.5 }, &params(4.0, 0.0)).unwrap();
        let v = c.values(2.0);
        assert_eq!(v.gamma, 0.5);
        assert!((v.phi - 2.0).abs() < 1e-15);
        assert!((v.c - 2.0).abs() < 1e-15);
    }

    #[test]
    fn linear_li_xu_limits() {
        // alpha -> 1 and beta -> 0 as t -> 0+
        let c = make_heat_family(HeatKind::LinearLiXu, &params(3.0, 1.0)).unwrap();
        let v = c.values(1e-9);
        assert!((v.alpha - 1.0).abs() < 1e-8);
        assert!(v.beta.unwrap().0 < 1e-8);
    }

    #[test]
    fn li_xu_alpha_limits() {
        let c = make_heat_family(HeatKind::LiXu, &params(3.0, 1.0)).unwrap();
        assert!((c.alpha.value(1e-7) - 1.0).abs() < 1e-6);
        assert!((c.alpha.value(1e3) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn parameter_validation() {
        let p = params(3.0, 1.0);
        assert!(make_heat_family(HeatKind::LiYauDavies { alpha: 1.0 }, &p).is_err());
        assert!(make_heat_family(HeatKind::LiYauDavies { alpha: 1.0 }, &params(3.0, 0.0)).is_ok());
        assert!(make_heat_family(HeatKind::Hamilton { delta: 1.0 }, &p).is_err());
        assert!(make_heat_family(HeatKind::LiXu, &params(3.0, 0.0)).is_err());
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let p = params(3.0, 0.7);
        for kind in [
            HeatKind::LiYauDavies { alpha: 1.5 },
            HeatKind::LiXu,
            HeatKind::LinearLiXu,
            HeatKind::Hamilton { delta: 0.5 },
        ] {
            let c = make_heat_family(kind, &p).unwrap();
            assert_derivatives_consistent(&c);
        }
    }
}
