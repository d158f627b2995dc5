//! Time functions `t ↦ (value, derivative)` and their validity intervals.

use std::fmt;

/// A C¹ function of time carrying its own derivative.
pub trait TimeFn: Send + Sync {
    fn eval(&self, t: f64) -> (f64, f64);

    fn value(&self, t: f64) -> f64 {
        self.eval(t).0
    }

    fn derivative(&self, t: f64) -> f64 {
        self.eval(t).1
    }
}

impl<F> TimeFn for F
where
    F: Fn(f64) -> (f64, f64) + Send + Sync,
{
    fn eval(&self, t: f64) -> (f64, f64) {
        self(t)
    }
}

pub type BoxedTimeFn = Box<dyn TimeFn>;

/// Constant in time.
pub fn constant(v: f64) -> BoxedTimeFn {
    Box::new(move |_t: f64| (v, 0.0))
}

/// Validity window in t. The left end is always open (every catalog entry is
/// singular or defined by a limit at t = 0).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TDomain {
    pub lo: f64,
    pub hi: f64,
    pub closed_hi: bool,
}

impl TDomain {
    pub fn open(lo: f64, hi: f64) -> TDomain {
        TDomain { lo, hi, closed_hi: false }
    }

    pub fn half_open(lo: f64, hi: f64) -> TDomain {
        TDomain { lo, hi, closed_hi: true }
    }

    /// All of `t > 0`.
    pub fn positive() -> TDomain {
        TDomain { lo: 0.0, hi: f64::INFINITY, closed_hi: false }
    }

    pub fn contains(&self, t: f64) -> bool {
        t > self.lo && if self.closed_hi { t <= self.hi } else { t < self.hi }
    }
}

impl fmt::Display for TDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}{}", self.lo, self.hi, if self.closed_hi { "]" } else { ")" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domain_membership() {
        let d = TDomain::half_open(0.0, 2.0);
        assert!(!d.contains(0.0));
        assert!(d.contains(2.0));
        assert!(!d.contains(2.0 + 1e-12));
        let p = TDomain::positive();
        assert!(p.contains(1e300));
        assert!(!p.contains(0.0));
    }
}
