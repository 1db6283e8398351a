//! Scalar building blocks shared by the series engine.

mod erfcx;
mod limits;

pub(crate) use erfcx::erfcx_nonneg;
pub use erfcx::erfcx_real;
pub use limits::{platform_limits, PlatformLimits};

/// `sin(u)/u`, exactly 1 at `u = 0` and even in `u`.
///
/// ```
/// use faddeyeva::sinc_safe;
/// assert_eq!(sinc_safe(0.0), 1.0);
/// assert_eq!(sinc_safe(-0.5), sinc_safe(0.5));
/// ```
#[inline]
pub fn sinc_safe(u: f64) -> f64 {
    let u = u.abs();
    if u == 0.0 {
        1.0
    } else {
        u.sin() / u
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sinc_values() {
        assert_eq!(sinc_safe(0.0), 1.0);
        assert!(sinc_safe(std::f64::consts::PI).abs() < 1e-16);
        // 50-digit value of sin(0.5)/0.5.
        let want = 0.958851077208406;
        assert!(((sinc_safe(0.5) - want) / want).abs() <= 2.0 * f64::EPSILON);
        assert_eq!(sinc_safe(1e-300), 1.0);
    }
}
