use std::f64::consts::PI;

use super::{FaddeyevaValue, SumSet};
use crate::scalar::{erfcx_nonneg, sinc_safe};
use crate::{AccuracyControl, PlatformLimits};

/// From this `y` on the leading imaginary-part bracket is below rounding of
/// `erfcx(y)` and is taken as exactly zero.
pub const BRACKET_ZERO_Y: f64 = 5.0;

/// Combines the sums into `(V, L)` for `x > 0`, `y ≥ 0`.
///
/// With `c = 2a/π`:
///
/// ```text
/// V = e^{−x²}·cos(2xy)·(erfcx(y) − c·y·e^{x²}Σ1) + c·x·e^{−x²}·sin(xy)·sinc(xy)
///     + (c/2)·y·(Σ2 + Σ3)
/// L = e^{−x²}·(c·x·sinc(2xy)·(1 + 2y²·e^{x²}Σ1) − sin(2xy)·erfcx(y))
///     + (c/2)·(Σ5 − Σ4)
/// ```
///
/// The first bracket of `L` is the leading-term combination that cancels
/// towards zero as `y` grows; it is dropped for `y ≥ 5`. For `x ≤ X_SINH`
/// the difference `(Σ5 − Σ4)/2` comes from the sums' sinh accumulator.
pub fn assemble_first_quadrant(
    x: f64,
    y: f64,
    ctl: &AccuracyControl,
    sums: &SumSet,
    limits: &PlatformLimits,
) -> FaddeyevaValue {
    let c = 2.0 * ctl.a / PI;
    if x >= limits.x_big {
        return FaddeyevaValue {
            v: 0.5 * c * y * sums.s3,
            l: 0.5 * c * sums.s5,
        };
    }

    let ex2 = sums.exp_neg_x2;
    let erfcx_y = erfcx_nonneg(y);
    let xy = x * y;
    let (sin2, cos2) = (2.0 * xy).sin_cos();

    let v = cos2 * ex2 * (erfcx_y - c * y * sums.s1_reduced)
        + c * x * ex2 * xy.sin() * sinc_safe(xy)
        + 0.5 * c * y * (sums.s2 + sums.s3);

    let leading = if y >= BRACKET_ZERO_Y {
        0.0
    } else {
        let grown = (2.0 * y * y).mul_add(sums.s1_reduced, 1.0);
        ex2 * (c * x * sinc_safe(2.0 * xy) * grown - sin2 * erfcx_y)
    };
    let odd = sums.half_odd_diff.unwrap_or(0.5 * (sums.s5 - sums.s4));

    FaddeyevaValue {
        v,
        l: leading + c * odd,
    }
}
