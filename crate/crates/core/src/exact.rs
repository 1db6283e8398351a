//! Unevaluated `hi + lo` pairs for exponent arguments.
//!
//! Arguments such as `x²` or `(a·n − x)²` reach several hundred in magnitude,
//! and a single rounding there costs `|arg|·ε` relative in the exponential.
//! Carrying the rounding error in `lo` keeps every exponential within an ulp
//! or two of the exact value.

use std::ops::{Add, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Pair {
    pub hi: f64,
    pub lo: f64,
}

impl Pair {
    pub const fn new(v: f64) -> Self {
        Pair { hi: v, lo: 0.0 }
    }

    /// Exact product `a·b`.
    #[inline]
    pub fn product(a: f64, b: f64) -> Self {
        let hi = a * b;
        Pair {
            hi,
            lo: a.mul_add(b, -hi),
        }
    }

    /// Exact sum `a + b`.
    #[inline]
    pub fn sum(a: f64, b: f64) -> Self {
        let hi = a + b;
        let bb = hi - a;
        Pair {
            hi,
            lo: (a - (hi - bb)) + (b - bb),
        }
    }

    #[inline]
    fn renormalized(hi: f64, lo: f64) -> Self {
        let s = hi + lo;
        Pair {
            hi: s,
            lo: lo - (s - hi),
        }
    }

    #[inline]
    pub fn scale(self, b: f64) -> Self {
        let p = Pair::product(self.hi, b);
        Pair::renormalized(p.hi, self.lo.mul_add(b, p.lo))
    }

    #[inline]
    pub fn square(self) -> Self {
        let p = Pair::product(self.hi, self.hi);
        Pair::renormalized(p.hi, (2.0 * self.hi).mul_add(self.lo, p.lo))
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.hi + self.lo
    }

    /// `e^{hi+lo}`, with `lo` folded in to first order (`|lo| ≤ ulp(hi)`).
    #[inline]
    pub fn exp(self) -> f64 {
        let e = self.hi.exp();
        e.mul_add(self.lo, e)
    }
}

impl Add for Pair {
    type Output = Pair;
    #[inline]
    fn add(self, other: Pair) -> Pair {
        let s = Pair::sum(self.hi, other.hi);
        Pair::renormalized(s.hi, s.lo + self.lo + other.lo)
    }
}

impl Sub for Pair {
    type Output = Pair;
    #[inline]
    fn sub(self, other: Pair) -> Pair {
        self + (-other)
    }
}

impl Neg for Pair {
    type Output = Pair;
    #[inline]
    fn neg(self) -> Pair {
        Pair {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}
