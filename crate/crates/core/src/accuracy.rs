//! The `tiny` accuracy knob and the expansion parameter derived from it.
//!
//! The series represent `e^{t²}` by a cosh expansion whose relative error is
//! `E(a) ≈ 2·e^{−π²/a²}`. Callers pick the target error `tiny`; the engine
//! inverts the relation to obtain `a` and stops summing once a new term
//! changes a sum by less than `max(tiny, ε)`.

use std::f64::consts::PI;

use crate::scalar::{platform_limits, PlatformLimits};

/// Largest accepted `tiny`; it keeps `a ≤ 1`.
pub const TINY_MAX: f64 = 1e-4;

/// Expansion error `2·e^{−π²/a²}` for parameter `a`.
pub fn expansion_error(a: f64) -> f64 {
    2.0 * (-(PI * PI) / (a * a)).exp()
}

/// Smallest useful `tiny` for a platform: the expansion error at `a = 1/2`
/// for double precision, at smaller `a` for formats with `ε < 1e-17`.
pub fn tiny_min(limits: &PlatformLimits) -> f64 {
    let a = if limits.eps >= 1e-17 {
        0.5
    } else if limits.eps < 1e-30 {
        0.36
    } else {
        0.4
    };
    expansion_error(a)
}

/// Accuracy settings derived from a requested `tiny`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AccuracyControl {
    pub tiny_requested: f64,
    /// `tiny_requested` clamped to `[tiny_min, TINY_MAX]`.
    pub tiny_effective: f64,
    /// Expansion parameter `π / sqrt(ln(2 / tiny_effective))`.
    pub a: f64,
    /// Loop-break threshold `max(tiny_effective, ε)`.
    pub conv_tol: f64,
    /// Set when the request was out of range and has been replaced.
    pub clamped: bool,
}

impl AccuracyControl {
    /// Settings for `tiny` against explicit platform limits.
    pub fn with_limits(tiny: f64, limits: &PlatformLimits) -> Self {
        let lo = tiny_min(limits);
        let (effective, clamped) = if tiny.is_nan() || tiny < lo {
            (lo, true)
        } else if tiny > TINY_MAX {
            (TINY_MAX, true)
        } else {
            (tiny, false)
        };
        let a = PI / (2.0 / effective).ln().sqrt();
        AccuracyControl {
            tiny_requested: tiny,
            tiny_effective: effective,
            a,
            conv_tol: effective.max(limits.eps),
            clamped,
        }
    }

    /// Most accurate setting for the working precision.
    pub fn most_accurate() -> Self {
        accuracy_from_tiny(tiny_min(&platform_limits()))
    }
}

impl Default for AccuracyControl {
    fn default() -> Self {
        AccuracyControl::most_accurate()
    }
}

/// Settings for `tiny` on the working precision.
///
/// Values outside `[tiny_min, 1e-4]`, including NaN and non-positive
/// values, are clamped and flagged.
///
/// ```
/// use faddeyeva::accuracy_from_tiny;
/// let ctl = accuracy_from_tiny(1e-8);
/// assert!(!ctl.clamped);
/// assert!(ctl.a > 0.5 && ctl.a < 1.0);
/// assert!(accuracy_from_tiny(1.0).clamped);
/// ```
pub fn accuracy_from_tiny(tiny: f64) -> AccuracyControl {
    AccuracyControl::with_limits(tiny, &platform_limits())
}
