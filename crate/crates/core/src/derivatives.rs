//! First partial derivatives of `V` and `L`.
//!
//! They follow from `w'(z) = −2z·w(z) + 2i/√π` and need no further series
//! work. Relative accuracy of `∂V/∂x` degrades where `y·L ≈ x·V`; compare it
//! in absolute terms there.

use std::f64::consts::FRAC_2_SQRT_PI;

use crate::{ComplexPoint, FaddeyevaValue};

/// The four first partials at a point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DerivativeSet {
    pub dv_dx: f64,
    pub dv_dy: f64,
    pub dl_dx: f64,
    pub dl_dy: f64,
}

/// Partials from a value `w` already computed at `z`.
///
/// `dl_dy` and `dl_dx` are the Cauchy–Riemann partners of `dv_dx` and
/// `dv_dy`, so those identities hold exactly.
///
/// ```
/// use faddeyeva::{derivatives_at, ComplexPoint, FaddeyevaValue};
/// let d = derivatives_at(ComplexPoint::new(0.0, 0.0), FaddeyevaValue { v: 1.0, l: 0.0 });
/// assert_eq!(d.dv_dx, 0.0);
/// assert!((d.dv_dy + 1.1283791670955126).abs() < 1e-16);
/// ```
pub fn derivatives_at(z: ComplexPoint, w: FaddeyevaValue) -> DerivativeSet {
    let dv_dx = 2.0 * (z.y * w.l - z.x * w.v);
    let dv_dy = 2.0 * (z.x * w.l + z.y * w.v) - FRAC_2_SQRT_PI;
    DerivativeSet {
        dv_dx,
        dv_dy,
        dl_dx: -dv_dy,
        dl_dy: dv_dx,
    }
}
