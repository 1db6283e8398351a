//! Adaptive Gauss–Legendre quadrature with a bisection error estimate.
//!
//! Each panel is integrated once whole and once as two halves; the halves'
//! sum is the panel value and the difference between the two is its error
//! estimate. The panel with the largest estimate is split until the total
//! falls below a floor set by rounding in the integrand.
//!
//! Integrands return their value and derivative. Sample positions are formed
//! in double-double and the derivative carries the low part, so panels tile
//! the interval exactly however far the refinement goes.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;
use std::sync::OnceLock;

const ORDER: usize = 20;

/// Relative rounding assumed per integrand evaluation, in units of ε.
const ROUNDING_ULPS: f64 = 2.0;

/// Neumaier compensated sum.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.carry += (self.sum - t) + v;
        } else {
            self.carry += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

/// Nodes and weights of the `ORDER`-point rule on `[-1, 1]`, found by Newton
/// iteration on the Legendre recurrence.
fn rule() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = ORDER;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut t = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut slope = 0.0;
            for _ in 0..100 {
                let (mut p_prev, mut p) = (1.0, t);
                for k in 2..=n {
                    let kf = k as f64;
                    let next = ((2.0 * kf - 1.0) * t * p - (kf - 1.0) * p_prev) / kf;
                    p_prev = p;
                    p = next;
                }
                slope = n as f64 * (t * p - p_prev) / (t * t - 1.0);
                let step = p / slope;
                t -= step;
                if step.abs() <= 1e-17 {
                    break;
                }
            }
            out.push((t, 2.0 / ((1.0 - t * t) * slope * slope)));
        }
        out
    })
}

/// Result of one adaptive integration.
#[derive(Clone, Copy, Debug)]
pub struct Quadrature {
    pub value: f64,
    /// Discretization estimate plus rounding floor.
    pub abs_err: f64,
    /// Integral of `|f|`, the scale of the rounding floor.
    pub abs_mass: f64,
}

/// Integral, integral of `|f|` and the node-position rounding bound.
#[derive(Clone, Copy)]
struct Moments {
    value: f64,
    abs: f64,
    noise: f64,
}

struct Panel {
    lo: f64,
    hi: f64,
    value: f64,
    abs: f64,
    noise: f64,
    err: f64,
    halves: [f64; 2],
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let v = s - a;
    (s, (a - (s - v)) + (b - v))
}

/// Moments over `[lo, hi]` with the fixed rule.
fn apply<F: Fn(f64) -> (f64, f64)>(f: &F, lo: f64, hi: f64) -> Moments {
    let (sum, sum_lo) = two_sum(lo, hi);
    let (diff, diff_lo) = two_sum(hi, -lo);
    let (mid, mid_lo) = (0.5 * sum, 0.5 * sum_lo);
    let (half, half_lo) = (0.5 * diff, 0.5 * diff_lo);
    let mut s = CompensatedSum::default();
    let mut m = CompensatedSum::default();
    let mut r = 0.0;
    for &(t, w) in rule() {
        let p = half * t;
        let p_lo = half.mul_add(t, -p) + half_lo * t;
        let (u, u_lo) = two_sum(mid, p);
        let (v, slope) = f(u);
        let v = v + slope * (u_lo + mid_lo + p_lo);
        s.add(w * v);
        m.add(w * v.abs());
        // Nodes and weights are correct to about one ulp.
        r += w * slope.abs() * (half * t).abs();
    }
    let width = half + half_lo;
    Moments {
        value: width * s.value(),
        abs: width * m.value(),
        noise: f64::EPSILON * width * r,
    }
}

fn panel<F: Fn(f64) -> (f64, f64)>(f: &F, lo: f64, hi: f64, whole: f64) -> Panel {
    let mid = 0.5 * (lo + hi);
    let left = apply(f, lo, mid);
    let right = apply(f, mid, hi);
    let value = left.value + right.value;
    Panel {
        lo,
        hi,
        value,
        abs: left.abs + right.abs,
        noise: left.noise + right.noise,
        err: (value - whole).abs(),
        halves: [left.value, right.value],
    }
}

/// Integrates `f` over `[lo, hi]` until the discretization estimate reaches
/// the rounding floor or `max_panels` is reached. The estimate measures the
/// single-rule value, so the two-halves value returned is far more accurate.
///
/// `f(t)` returns `(f, f′)` at `t`.
pub fn integrate<F: Fn(f64) -> (f64, f64)>(
    f: F,
    lo: f64,
    hi: f64,
    max_panels: usize,
) -> Quadrature {
    if lo == hi {
        return Quadrature {
            value: 0.0,
            abs_err: 0.0,
            abs_mass: 0.0,
        };
    }
    let whole = apply(&f, lo, hi);
    let mut heap = BinaryHeap::new();
    heap.push(panel(&f, lo, hi, whole.value));

    loop {
        let mut err = CompensatedSum::default();
        let mut mass = CompensatedSum::default();
        let mut noise = CompensatedSum::default();
        for p in heap.iter() {
            err.add(p.err);
            mass.add(p.abs);
            noise.add(p.noise);
        }
        let floor = ROUNDING_ULPS * f64::EPSILON * mass.value() + noise.value();
        if err.value() <= floor || heap.len() >= max_panels {
            let mut value = CompensatedSum::default();
            for p in heap.iter() {
                value.add(p.value);
            }
            return Quadrature {
                value: value.value(),
                abs_err: err.value() + floor,
                abs_mass: mass.value(),
            };
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.lo + worst.hi);
        if mid <= worst.lo || mid >= worst.hi {
            // Cannot split further; keep the panel and stop refining it.
            heap.push(Panel { err: 0.0, ..worst });
            continue;
        }
        heap.push(panel(&f, worst.lo, mid, worst.halves[0]));
        heap.push(panel(&f, mid, worst.hi, worst.halves[1]));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_interval_length() {
        let mut s = CompensatedSum::default();
        for &(_, w) in rule() {
            s.add(w);
        }
        assert!((s.value() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn rule_is_exact_for_high_degree_polynomials() {
        // ∫_{-1}^{1} t^38 dt = 2/39
        let m = apply(&|t: f64| (t.powi(38), 38.0 * t.powi(37)), -1.0, 1.0);
        assert!((m.value - 2.0 / 39.0).abs() < 1e-15);
    }

    #[test]
    fn gaussian_integral() {
        let q = integrate(
            |t: f64| {
                let g = (-t * t).exp();
                (g, -2.0 * t * g)
            },
            0.0,
            30.0,
            4000,
        );
        let want = 0.5 * PI.sqrt();
        assert!((q.value - want).abs() <= q.abs_err);
        assert!(q.abs_err < 1e-14);
    }

    #[test]
    fn compensation_recovers_small_addends() {
        let mut s = CompensatedSum::default();
        s.add(1.0);
        for _ in 0..10 {
            s.add(1e-17);
        }
        s.add(-1.0);
        assert!((s.value() - 1e-16).abs() < 1e-30);
    }
}
