//! Evaluation of `w(z) = e^{−z²}·erfc(−iz)` over the whole complex plane.
//!
//! The series engine works in the closed first quadrant. Other points are
//! reduced to it: `V` is even and `L` odd in `x`, and below the real axis
//! `w(z) = 2e^{−z²} − w(−z)`.

mod assemble;
mod sums;

use std::f64::consts::FRAC_2_SQRT_PI;

pub use assemble::{assemble_first_quadrant, BRACKET_ZERO_Y};
pub use sums::{compute_sums, n_cut_sigma1, n_cut_sigma24, SumSet, X_SINH};

use crate::exact::Pair;
use crate::scalar::{erfcx_nonneg, platform_limits};
use crate::{AccuracyControl, Error, PlatformLimits};

/// From this coordinate magnitude on, `w(z) = i/(√π·z)` to working precision;
/// the first correction is `1/(2z²) ≤ 5e-25` relative.
pub const FAR_FIELD: f64 = 1e12;

/// A point `z = x + iy`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexPoint {
    pub x: f64,
    pub y: f64,
}

impl ComplexPoint {
    pub const fn new(x: f64, y: f64) -> Self {
        ComplexPoint { x, y }
    }
}

/// `w(z) = V + iL`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FaddeyevaValue {
    /// Real part; the Voigt function for `y > 0`.
    pub v: f64,
    /// Imaginary part.
    pub l: f64,
}

/// Evaluates `w(z)`.
///
/// Fails with [`Error::InvalidInput`] for non-finite coordinates and with
/// [`Error::OverflowDomain`] below the real axis when `e^{y²−x²}` overflows.
///
/// ```
/// use faddeyeva::{faddeyeva, AccuracyControl, ComplexPoint};
/// let w = faddeyeva(ComplexPoint::new(1.0, 1e-20), &AccuracyControl::default()).unwrap();
/// assert!((w.v - 3.678794411714423e-1).abs() < 1e-15);
/// assert!((w.l - 6.071577058413937e-1).abs() < 1e-15);
/// ```
pub fn faddeyeva(z: ComplexPoint, ctl: &AccuracyControl) -> Result<FaddeyevaValue, Error> {
    let ComplexPoint { x, y } = z;
    if !(x.is_finite() && y.is_finite()) {
        return Err(Error::InvalidInput { x, y });
    }
    let limits = platform_limits();
    if y >= 0.0 {
        return upper_half(x, y, ctl, &limits);
    }

    let growth_exp = Pair::product(y, y) - Pair::product(x, x);
    if growth_exp.value() > limits.log_r_max {
        return Err(Error::OverflowDomain { x, y });
    }
    let mirrored = upper_half(-x, -y, ctl, &limits)?;
    let growth = growth_exp.exp();
    let (sin2, cos2) = (2.0 * x * y).sin_cos();
    let v = 2.0 * growth * cos2 - mirrored.v;
    let l = -2.0 * growth * sin2 - mirrored.l;
    if !(v.is_finite() && l.is_finite()) {
        return Err(Error::OverflowDomain { x, y });
    }
    Ok(FaddeyevaValue { v, l })
}

/// `y ≥ 0`: evaluate at `|x|` and restore the sign of `L`.
fn upper_half(
    x: f64,
    y: f64,
    ctl: &AccuracyControl,
    limits: &PlatformLimits,
) -> Result<FaddeyevaValue, Error> {
    let w = first_quadrant(x.abs(), y, ctl, limits)?;
    Ok(if x.is_sign_negative() {
        FaddeyevaValue { v: w.v, l: -w.l }
    } else {
        w
    })
}

fn first_quadrant(
    x: f64,
    y: f64,
    ctl: &AccuracyControl,
    limits: &PlatformLimits,
) -> Result<FaddeyevaValue, Error> {
    if x < limits.r_min {
        return Ok(FaddeyevaValue {
            v: erfcx_nonneg(y),
            l: 0.0,
        });
    }
    if x.max(y) >= FAR_FIELD {
        return Ok(far_field(x, y));
    }
    let sums = compute_sums(x, y, ctl, limits)?;
    Ok(assemble_first_quadrant(x, y, ctl, &sums, limits))
}

/// `i/(√π·z)` with the modulus scaled out so that `x² + y²` cannot overflow.
fn far_field(x: f64, y: f64) -> FaddeyevaValue {
    let s = x.max(y);
    let (xs, ys) = (x / s, y / s);
    let k = 0.5 * FRAC_2_SQRT_PI / (xs.mul_add(xs, ys * ys) * s);
    FaddeyevaValue {
        v: ys * k,
        l: xs * k,
    }
}
