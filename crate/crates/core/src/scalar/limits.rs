use std::sync::OnceLock;

/// Floating-point limits of the working precision and the cutoffs derived
/// from them.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlatformLimits {
    /// Relative accuracy `ε`.
    pub eps: f64,
    /// Smallest positive normal number.
    pub r_min: f64,
    /// Largest finite number.
    pub r_max: f64,
    /// `sqrt(−ln r_min)`: beyond it `e^{−x²}` underflows.
    pub x_big: f64,
    /// `ln r_max`: bound on `y² − x²` below the real axis.
    pub log_r_max: f64,
    /// `ln r_min`: exponents below it give terms that are treated as zero.
    pub ln_r_min: f64,
}

impl PlatformLimits {
    /// Derives the cutoffs from the three primary limits.
    pub fn new(eps: f64, r_min: f64, r_max: f64) -> Self {
        let ln_r_min = r_min.ln();
        PlatformLimits {
            eps,
            r_min,
            r_max,
            x_big: (-ln_r_min).sqrt(),
            log_r_max: r_max.ln(),
            ln_r_min,
        }
    }

    /// Limits of IEEE binary64.
    pub fn binary64() -> Self {
        PlatformLimits::new(f64::EPSILON, f64::MIN_POSITIVE, f64::MAX)
    }
}

/// Limits of the working precision, computed on first use.
pub fn platform_limits() -> PlatformLimits {
    static LIMITS: OnceLock<PlatformLimits> = OnceLock::new();
    *LIMITS.get_or_init(PlatformLimits::binary64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary64_values() {
        let l = platform_limits();
        assert_eq!(l.eps, 2.220446049250313e-16);
        assert!((l.x_big - 26.615717509251258).abs() < 1e-13);
        assert!((l.log_r_max - 709.782712893384).abs() < 1e-12);
        assert!(l.eps > 0.0 && l.r_min > 0.0 && l.r_max > l.r_min);
    }

    #[test]
    fn x_big_squares_back_to_ln_r_min() {
        let l = platform_limits();
        let sq = l.x_big * l.x_big;
        let target = -l.r_min.ln();
        assert!((sq - target).abs() <= 2.0 * f64::EPSILON * target);
    }

    #[test]
    fn past_x_big_the_gaussian_underflows() {
        let l = platform_limits();
        let t = l.x_big + 1.0;
        assert_eq!((-t * t).exp(), 0.0);
    }
}
