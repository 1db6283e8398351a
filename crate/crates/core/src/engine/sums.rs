//! Truncated exponential sums.
//!
//! With `D(m) = a²m² + y²` and indices from 1:
//!
//! | sum | term                          |
//! |-----|-------------------------------|
//! | Σ1  | `e^{−(a²n² + x²)} / D(n)`     |
//! | Σ2  | `e^{−(an + x)²} / D(n)`       |
//! | Σ3  | `e^{−(an − x)²} / D(n)`       |
//! | Σ4  | `an · e^{−(an + x)²} / D(n)`  |
//! | Σ5  | `an · e^{−(an − x)²} / D(n)`  |
//!
//! Σ3 and Σ5 peak near `n = x/a`, so they are summed outward from
//! `n₀ = ceil(x/a)`: cycle `n` adds the right-wing index `n₀ + n − 1` and,
//! while it is at least 1, the left-wing index `n₀ − n`.
//!
//! Below `x_big` each cycle evaluates one fresh exponential, `e^{−a²n²}`.
//! Every other factor is a running product of exponentials hoisted out of the
//! loop, all with small arguments so their rounding stays near one ulp.
//! Beyond `x_big` only Σ3 and Σ5 survive. Each wing's exponent is formed in
//! extended precision and exponentiated only when the term is representable;
//! the left exponent is the right one plus a fixed offset and a per-cycle step.

use crate::exact::Pair;
use crate::{AccuracyControl, Error, PlatformLimits};

/// Largest `x` at which `(Σ5 − Σ4)/2` uses three odd Taylor terms of
/// `sinh(2anx)` wherever `2anx` is small enough.
pub const X_SINH: f64 = 5e-4;

/// Largest `x` for which `(Σ5 − Σ4)/2` is accumulated directly as
/// `Σ an·e^{−a²n²−x²}·sinh(2anx)/D(n)` instead of as a difference. Below it
/// the difference cancels by roughly `1/(2ax)`; above it the direct form
/// gains nothing.
pub const X_ODD: f64 = 1.0;

/// Largest `2anx` for which three odd Taylor terms reproduce `sinh`.
const SINH_TAYLOR_MAX: f64 = 1e-2;

/// The five sums plus by-products the assembly step reuses.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SumSet {
    pub s1: f64,
    pub s2: f64,
    pub s3: f64,
    pub s4: f64,
    pub s5: f64,
    /// Loop cycles consumed.
    pub n_used: usize,
    /// `e^{x²}·Σ1`, kept separately because `Σ1` itself may be subnormal.
    /// Zero at and beyond `x_big`.
    pub s1_reduced: f64,
    /// `e^{−x²}`; zero at and beyond `x_big`.
    pub exp_neg_x2: f64,
    /// `(Σ5 − Σ4)/2` accumulated without cancellation, for `x ≤ X_ODD`.
    pub half_odd_diff: Option<f64>,
}

/// Last index whose Σ1 exponential `e^{−(a²n² + x²)}` can reach `r_min`.
pub fn n_cut_sigma1(a: f64, x: f64, limits: &PlatformLimits) -> Result<usize, Error> {
    if !(0.0..limits.x_big).contains(&x) {
        return Err(Error::Precondition("n_cut_sigma1 needs 0 <= x < x_big"));
    }
    let room = (-limits.ln_r_min - x * x).max(0.0);
    Ok((room.sqrt() / a).ceil() as usize)
}

/// Last index whose Σ2/Σ4 exponential `e^{−(an + x)²}` can reach `r_min`.
pub fn n_cut_sigma24(a: f64, x: f64, limits: &PlatformLimits) -> Result<usize, Error> {
    if !(0.0..limits.x_big).contains(&x) {
        return Err(Error::Precondition("n_cut_sigma24 needs 0 <= x < x_big"));
    }
    Ok(((limits.x_big - x) / a).ceil() as usize)
}

/// Sums Σ1–Σ5 at `(x, y)` in the closed first quadrant.
///
/// Each sum stops once a new term changes it by at most `conv_tol` relative,
/// which includes terms that have underflowed to zero.
pub fn compute_sums(
    x: f64,
    y: f64,
    ctl: &AccuracyControl,
    limits: &PlatformLimits,
) -> Result<SumSet, Error> {
    if !(x.is_finite() && y.is_finite() && x >= 0.0 && y >= 0.0) {
        return Err(Error::Precondition(
            "compute_sums needs finite x >= 0, y >= 0",
        ));
    }
    if x < limits.x_big {
        near_sums(x, y, ctl, limits)
    } else {
        far_sums(x, y, ctl, limits)
    }
}

#[inline]
fn settled(term: f64, sum_before: f64, tol: f64) -> bool {
    term <= tol * sum_before
}

/// `a²m² + y²` with both squares carried exactly.
#[inline]
fn denominator(a: f64, m: f64, y2: Pair) -> f64 {
    (Pair::product(a, m).square() + y2).value()
}

#[inline]
fn sinh_taylor(u: f64) -> f64 {
    let u2 = u * u;
    u * (1.0 + u2 / 6.0 * (1.0 + u2 / 20.0))
}

fn near_sums(
    x: f64,
    y: f64,
    ctl: &AccuracyControl,
    limits: &PlatformLimits,
) -> Result<SumSet, Error> {
    let a = ctl.a;
    let tol = ctl.conv_tol;
    let y2 = Pair::product(y, y);

    let exp_neg_x2 = (-Pair::product(x, x)).exp();
    let down_step = (-Pair::product(a, x).scale(2.0)).exp();

    let n0 = (x / a).ceil().max(1.0);
    // Distance of the first right-wing abscissa past the peak, in [0, a).
    let d = Pair::product(a, n0) - Pair::new(x);
    let peak = (-d.square()).exp();
    let two_ad = d.scale(2.0 * a);
    let right_step = (-two_ad).exp();
    let left_step = two_ad.exp();

    let mirror = x == 0.0;
    let odd_path = x <= X_ODD;
    // sinh(nθ) for θ = 2ax through S ← S + D, D ← D + k·S with
    // k = 4·sinh²(θ/2): every update adds non-negative terms.
    let theta = 2.0 * a * x;
    let k = {
        let h = (0.5 * theta).sinh();
        4.0 * h * h
    };
    let mut sinh_n = theta.sinh();
    let mut sinh_gap = sinh_n;

    // Sized by the x = 0 count: near x_big the per-x count is too small
    // to cover both wings of Σ3.
    let cap = 2 * (n_cut_sigma1(a, 0.0, limits)? + 1);

    let (mut s1r, mut s2, mut s3, mut s4, mut s5, mut odd) = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
    let mut q_prev = 1.0;
    let mut down = 1.0;
    let mut right_pow = 1.0;
    let mut left_pow = 1.0;

    for n in 1..=cap {
        let nf = n as f64;
        let an = Pair::product(a, nf);
        let an2 = an.square();
        let q = (-an2).exp();
        let dn = (an2 + y2).value();

        down *= down_step;
        let t1 = q / dn;
        let t2 = q * exp_neg_x2 * down / dn;
        let t4 = an.hi * t2;
        let mut done = settled(t1, s1r, tol) && settled(t2, s2, tol) && settled(t4, s4, tol);
        s1r += t1;
        s2 += t2;
        s4 += t4;

        if mirror {
            done &= settled(t2, s3, tol) && settled(t4, s5, tol);
            s3 += t2;
            s5 += t4;
        } else {
            let m_right = n0 + nf - 1.0;
            let right = q_prev * peak * right_pow / denominator(a, m_right, y2);
            right_pow *= right_step;
            let m_left = n0 - nf;
            let left = if m_left >= 1.0 {
                left_pow *= left_step;
                q * left_pow * peak / denominator(a, m_left, y2)
            } else {
                0.0
            };
            let t3 = right + left;
            let t5 = a * m_right * right + a * m_left * left;
            done &= settled(t3, s3, tol) && settled(t5, s5, tol);
            s3 += t3;
            s5 += t5;
        }

        if odd_path {
            let u = 2.0 * an.hi * x;
            let sh = if x <= X_SINH && u <= SINH_TAYLOR_MAX {
                sinh_taylor(u)
            } else {
                sinh_n
            };
            let th = an.hi * q * exp_neg_x2 * sh / dn;
            done &= settled(th, odd, tol);
            odd += th;
            sinh_gap += k * sinh_n;
            sinh_n += sinh_gap;
        }

        q_prev = q;
        if done {
            return Ok(SumSet {
                s1: exp_neg_x2 * s1r,
                s2,
                s3,
                s4,
                s5,
                n_used: n,
                s1_reduced: s1r,
                exp_neg_x2,
                half_odd_diff: odd_path.then_some(odd),
            });
        }
    }
    Err(Error::LoopCap { cap, x, y })
}

fn far_sums(
    x: f64,
    y: f64,
    ctl: &AccuracyControl,
    limits: &PlatformLimits,
) -> Result<SumSet, Error> {
    let a = ctl.a;
    let tol = ctl.conv_tol;
    let y2 = Pair::product(y, y);
    let floor = limits.ln_r_min;

    let n0 = (x / a).ceil();
    let d = Pair::product(a, n0) - Pair::new(x);
    // left exponent − right exponent = (a² − 2ad) + n·(4ad − 2a²)
    let a2 = Pair::product(a, a);
    let two_ad = d.scale(2.0 * a);
    let offset = a2 - two_ad;
    let step = (two_ad - a2).scale(2.0);

    let cap = (4.0 * limits.x_big / a) as usize + 64;
    let (mut s3, mut s5) = (0.0, 0.0);

    for n in 1..=cap {
        let nf = n as f64;
        let right_exp = -(d + Pair::product(a, nf - 1.0)).square();
        let m_right = n0 + nf - 1.0;
        let right = if right_exp.hi >= floor {
            right_exp.exp() / denominator(a, m_right, y2)
        } else {
            0.0
        };
        let m_left = n0 - nf;
        let left = if m_left >= 1.0 {
            let left_exp = right_exp + offset + step.scale(nf);
            if left_exp.hi >= floor {
                left_exp.exp() / denominator(a, m_left, y2)
            } else {
                0.0
            }
        } else {
            0.0
        };
        let t3 = right + left;
        let t5 = a * m_right * right + a * m_left * left;
        let done = settled(t3, s3, tol) && settled(t5, s5, tol);
        s3 += t3;
        s5 += t5;
        if done {
            return Ok(SumSet {
                s1: 0.0,
                s2: 0.0,
                s3,
                s4: 0.0,
                s5,
                n_used: n,
                s1_reduced: 0.0,
                exp_neg_x2: 0.0,
                half_odd_diff: None,
            });
        }
    }
    Err(Error::LoopCap { cap, x, y })
}
