//! Double-double scalars for the margin expressions.
//!
//! The catalog entries frequently satisfy an inequality with exact equality,
//! so the margin is a cancellation of terms that can be six orders of
//! magnitude larger than the verdict tolerance (e.g. `φ' ~ 1/t²` at
//! `t = 1e-3`). Evaluating the margin sums in plain f64 loses ~3 ulp of the
//! largest term, which is enough to push an exactly-zero margin below the
//! 1e-9 certification tolerance. A compensated double-double accumulator
//! keeps the evaluation error at the level of the rounded inputs themselves.

#[derive(Clone, Copy, Debug)]
pub struct Dd {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    #[inline]
    pub fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, rhs: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let lo = e + self.lo + rhs.lo;
        let (hi, lo) = two_sum(s, lo);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, rhs: Dd) -> Dd {
        self.add(rhs.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn mul(self, rhs: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let lo = e + self.hi * rhs.lo + self.lo * rhs.hi;
        let (hi, lo) = two_sum(p, lo);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self.sub(rhs.mul(Dd::from(q1)));
        let q2 = r.value() / rhs.hi;
        let (hi, lo) = two_sum(q1, q2);
        Dd { hi, lo }
    }
}

/// x * y as a double-double.
#[inline]
pub fn prod(x: f64, y: f64) -> Dd {
    let (p, e) = two_prod(x, y);
    Dd { hi: p, lo: e }
}
