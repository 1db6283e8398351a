//! Reference evaluations of `w(z)` for testing the fast engine.
//!
//! Nothing here calls into the engine; only its plain data types are shared.
//! Four methods are available:
//!
//! * segment quadrature: `w(iy) = erfcx(y)` on the imaginary axis, carried
//!   to `x + iy` by a finite horizontal integral, with `erfcx(y)` itself a
//!   quadrature of `e^{−s(2y+s)}` on `[0, ∞)`;
//! * the Laplace form `w = (1/√π)·∫₀^∞ e^{−t²/4 − yt}·e^{ixt} dt`, free of
//!   cancellation while `x` times the decay length stays small, and used
//!   there in preference to the segments;
//! * the scaled linear path `w = e^{−z²} + (2iz/√π)·∫₀¹ e^{−z²(1−t²)} dt`,
//!   accurate only where `e^{y²−x²}` is moderate;
//! * the large-`|z|` expansion `w ≈ (i/(√π z))·Σ (2k−1)!!/(2z²)^k`.

mod naive;
mod quad;

use std::f64::consts::FRAC_2_SQRT_PI;

use faddeyeva::ComplexPoint;
use num_complex::Complex64;
use thiserror::Error;

pub use naive::oracle_sums_naive;
pub use quad::{integrate, CompensatedSum, Quadrature};

/// Largest modulus handled by segment quadrature.
pub const QUADRATURE_MODULUS: f64 = 50.0;
/// Smallest `x² + y²` handled by the large-modulus expansion.
pub const ASYMPTOTIC_MODULUS_SQ: f64 = 1e4;
/// Above this `x·y` the segment integrands oscillate too much to trust.
pub const OSCILLATION_LIMIT: f64 = 200.0;
/// Largest phase `x·T` over the Laplace integrand's decay length `T` for
/// which that form is preferred: within one period cancellation stays mild.
pub const LAPLACE_PHASE_LIMIT: f64 = std::f64::consts::TAU;
/// The Laplace integrand is cut where its exponent reaches this value.
const LAPLACE_CUTOFF: f64 = 750.0;
/// Exponent at which the decay length is measured.
const LAPLACE_DECAY: f64 = 40.0;
/// Largest modulus handled by the linear path.
pub const LINEAR_PATH_MODULUS: f64 = 5.0;

const MAX_PANELS: usize = 20_000;

/// Which reference method produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMethod {
    SegmentQuadrature,
    LaplaceIntegral,
    Asymptotic,
    ScaledLinearPath,
}

/// A reference value with its estimated absolute error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleResult {
    pub v: f64,
    pub l: f64,
    /// Bound on the absolute error of each component.
    pub est_abs_err: f64,
    pub method: OracleMethod,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("reference not converged at ({x}, {y}): estimate {estimate:e} > target {target:e}")]
    ConvergenceFailure {
        x: f64,
        y: f64,
        estimate: f64,
        target: f64,
    },
    #[error("({x}, {y}) is outside every reference method's region")]
    OutsideRegion { x: f64, y: f64 },
}

/// Reference `w(z)` with an absolute error at most `target_abs_err`.
///
/// Requires `y ≥ 0` and either `|z| ≤ 50` or `x² + y² ≥ 10⁴`. Points with
/// `x·y > 200` are reported as [`OracleError::ConvergenceFailure`].
pub fn oracle_w(z: ComplexPoint, target_abs_err: f64) -> Result<OracleResult, OracleError> {
    let r = best_effort(z)?;
    if r.est_abs_err > target_abs_err {
        return Err(OracleError::ConvergenceFailure {
            x: z.x,
            y: z.y,
            estimate: r.est_abs_err,
            target: target_abs_err,
        });
    }
    Ok(r)
}

/// [`oracle_w`] with target `1e-14·max(|V|, |L|, 1e3·R_min)`.
pub fn oracle_w_default(z: ComplexPoint) -> Result<OracleResult, OracleError> {
    let r = best_effort(z)?;
    let target = 1e-14 * r.v.abs().max(r.l.abs()).max(1e3 * f64::MIN_POSITIVE);
    oracle_w(z, target)
}

fn best_effort(z: ComplexPoint) -> Result<OracleResult, OracleError> {
    let ComplexPoint { x, y } = z;
    if !(x.is_finite() && y.is_finite() && y >= 0.0) {
        return Err(OracleError::OutsideRegion { x, y });
    }
    let ax = x.abs();
    let r = if ax.hypot(y) >= ASYMPTOTIC_MODULUS_SQ.sqrt() {
        asymptotic(ax, y)
    } else if ax.hypot(y) <= QUADRATURE_MODULUS {
        if ax * y > OSCILLATION_LIMIT {
            return Err(OracleError::ConvergenceFailure {
                x,
                y,
                estimate: f64::INFINITY,
                target: 0.0,
            });
        }
        if ax * laplace_length(y) <= LAPLACE_PHASE_LIMIT {
            laplace_integral(ax, y)
        } else {
            segment_quadrature(ax, y)
        }
    } else {
        return Err(OracleError::OutsideRegion { x, y });
    };
    Ok(if x.is_sign_negative() {
        OracleResult { l: -r.l, ..r }
    } else {
        r
    })
}

/// `e^{−v²}` with the square carried exactly.
fn exp_neg_square(v: f64) -> f64 {
    let p = v * v;
    let e = v.mul_add(v, -p);
    (-p).exp() * (1.0 - e)
}

/// `e^{y²}·erfc(y)` as `(2/√π)·∫₀^∞ e^{−s(2y+s)} ds`, truncated where the
/// integrand drops below `e^{−750}`.
pub fn erfcx_quadrature(y: f64) -> Quadrature {
    let end = 750.0 / (y + (y * y + 750.0).sqrt());
    let q = integrate(
        |s| {
            let g = exp_neg_product(s, 2.0 * y, s);
            (g, -2.0 * (y + s) * g)
        },
        0.0,
        end,
        MAX_PANELS,
    );
    Quadrature {
        value: FRAC_2_SQRT_PI * q.value,
        abs_err: FRAC_2_SQRT_PI * q.abs_err,
        abs_mass: FRAC_2_SQRT_PI * q.abs_mass,
    }
}

/// `erfc(y) = (2/√π)·∫_y^∞ e^{−t²} dt` for `y ≥ 0`.
pub fn erfc_quadrature(y: f64) -> Quadrature {
    let end = (y * y + 750.0).sqrt();
    let q = integrate(
        |t| {
            let g = exp_neg_square(t);
            (g, -2.0 * t * g)
        },
        y,
        end,
        MAX_PANELS,
    );
    Quadrature {
        value: FRAC_2_SQRT_PI * q.value,
        abs_err: FRAC_2_SQRT_PI * q.abs_err,
        abs_mass: FRAC_2_SQRT_PI * q.abs_mass,
    }
}

/// `e^{−u·(p+q)}` with the sum and product rounding folded in to first order.
fn exp_neg_product(u: f64, p: f64, q: f64) -> f64 {
    let d = p + q;
    let bv = d - p;
    let d_lo = (p - (d - bv)) + (q - bv);
    let hi = u * d;
    let lo = u.mul_add(d, -hi) + u * d_lo;
    (-hi).exp() * (1.0 - lo)
}

/// `(sin(a·b), cos(a·b))` with the rounding error of the product folded in
/// to first order, so large arguments lose no extra accuracy.
fn sin_cos_of_product(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let lo = a.mul_add(b, -p);
    let (s, c) = p.sin_cos();
    (s + c * lo, c - s * lo)
}

/// Segment quadrature for `x, y ≥ 0`.
///
/// ```text
/// V =  cos(2xy)·e^{−x²}·erfcx(y) + (2/√π)·∫₀ˣ e^{−u(2x−u)}·sin(2yu) du
/// L = −sin(2xy)·e^{−x²}·erfcx(y) + (2/√π)·∫₀ˣ e^{−u(2x−u)}·cos(2yu) du
/// ```
///
/// The weight `e^{−u(2x−u)}` is at most 1 on `[0, x]`, so nothing overflows.
pub fn segment_quadrature(x: f64, y: f64) -> OracleResult {
    let ecx = erfcx_quadrature(y);
    let weight = |u: f64| exp_neg_product(u, 2.0 * x, -u);
    let sample = |u: f64| {
        let wt = weight(u);
        let (s, c) = sin_cos_of_product(2.0 * y, u);
        let decay = -2.0 * (x - u);
        (
            (wt * s, wt * (decay * s + 2.0 * y * c)),
            (wt * c, wt * (decay * c - 2.0 * y * s)),
        )
    };
    let is = integrate(|u| sample(u).0, 0.0, x, MAX_PANELS);
    let ic = integrate(|u| sample(u).1, 0.0, x, MAX_PANELS);

    let gauss = exp_neg_square(x);
    let (sin2, cos2) = sin_cos_of_product(2.0 * x, y);
    let lead = gauss * ecx.value;
    let v_terms = [cos2 * lead, FRAC_2_SQRT_PI * is.value];
    let l_terms = [-sin2 * lead, FRAC_2_SQRT_PI * ic.value];

    let mut v = CompensatedSum::default();
    let mut l = CompensatedSum::default();
    v_terms.iter().for_each(|&t| v.add(t));
    l_terms.iter().for_each(|&t| l.add(t));

    let lead_err = gauss * ecx.abs_err + f64::EPSILON * lead;
    let combine = 0.5 * f64::EPSILON;
    let err_v =
        lead_err + FRAC_2_SQRT_PI * is.abs_err + combine * (v_terms[0].abs() + v_terms[1].abs());
    let err_l =
        lead_err + FRAC_2_SQRT_PI * ic.abs_err + combine * (l_terms[0].abs() + l_terms[1].abs());

    OracleResult {
        v: v.value(),
        l: l.value(),
        est_abs_err: err_v.max(err_l),
        method: OracleMethod::SegmentQuadrature,
    }
}

/// Length over which `e^{−t²/4 − yt}` falls to `e^{−40}`.
fn laplace_length(y: f64) -> f64 {
    2.0 * LAPLACE_DECAY / (y + (y * y + LAPLACE_DECAY).sqrt())
}

/// Laplace-form evaluation for `x, y ≥ 0`:
///
/// ```text
/// V = (1/√π)·∫₀^∞ e^{−t²/4 − yt}·cos(xt) dt
/// L = (1/√π)·∫₀^∞ e^{−t²/4 − yt}·sin(xt) dt
/// ```
///
/// Accurate to a few ulps of each part while `x·T` is small, `T` being the
/// decay length; oscillation makes it useless for large `x`.
pub fn laplace_integral(x: f64, y: f64) -> OracleResult {
    let end = 2.0 * LAPLACE_CUTOFF / (y + (y * y + LAPLACE_CUTOFF).sqrt());
    let sample = |t: f64| {
        let g = exp_neg_product(t, y, 0.25 * t);
        let (s, c) = sin_cos_of_product(x, t);
        let decay = -(0.5 * t + y);
        (
            (g * c, g * (decay * c - x * s)),
            (g * s, g * (decay * s + x * c)),
        )
    };
    let scale = 0.5 * FRAC_2_SQRT_PI;
    let qc = integrate(|t| sample(t).0, 0.0, end, MAX_PANELS);
    let qs = integrate(|t| sample(t).1, 0.0, end, MAX_PANELS);
    let err = |q: &Quadrature| scale * (q.abs_err + f64::EPSILON * q.value.abs());
    OracleResult {
        v: scale * qc.value,
        l: scale * qs.value,
        est_abs_err: err(&qc).max(err(&qs)),
        method: OracleMethod::LaplaceIntegral,
    }
}

/// Linear-path evaluation for `|z| ≤ 5`, `y ≥ 0`.
///
/// Loses accuracy in proportion to `e^{y²−x²}`; the estimate accounts for it.
pub fn scaled_linear_path(x: f64, y: f64) -> Result<OracleResult, OracleError> {
    if x.hypot(y) > LINEAR_PATH_MODULUS || y < 0.0 {
        return Err(OracleError::OutsideRegion { x, y });
    }
    let z = Complex64::new(x, y);
    let z2 = z * z;
    let sample = |t: f64| {
        let g = (-z2 * (1.0 - t * t)).exp();
        (g, 2.0 * t * z2 * g)
    };
    let re = integrate(
        |t| {
            let (g, d) = sample(t);
            (g.re, d.re)
        },
        0.0,
        1.0,
        MAX_PANELS,
    );
    let im = integrate(
        |t| {
            let (g, d) = sample(t);
            (g.im, d.im)
        },
        0.0,
        1.0,
        MAX_PANELS,
    );
    let integral = Complex64::new(re.value, im.value);

    let gauss = (-z2).exp();
    let path = Complex64::new(0.0, FRAC_2_SQRT_PI) * z * integral;
    let w = gauss + path;

    let scale = gauss.norm() + path.norm();
    let quad_err = FRAC_2_SQRT_PI * z.norm() * (re.abs_err + im.abs_err);
    let est = quad_err + 8.0 * f64::EPSILON * scale * (1.0 + z2.norm());
    Ok(OracleResult {
        v: w.re,
        l: w.im,
        est_abs_err: est,
        method: OracleMethod::ScaledLinearPath,
    })
}

/// Large-modulus expansion for `x² + y² ≥ 10⁴`, `y ≥ 0`.
///
/// Terms are added while they shrink; the first omitted term is the error
/// estimate.
pub fn asymptotic(x: f64, y: f64) -> OracleResult {
    let z = Complex64::new(x, y);
    let inv_2z2 = (2.0 * z * z).inv();
    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    let mut omitted = f64::INFINITY;
    for k in 1..200 {
        let next = term * inv_2z2 * (2 * k - 1) as f64;
        if next.norm() >= term.norm() {
            break;
        }
        if next.norm() <= 1e-3 * f64::EPSILON * sum.norm() {
            omitted = next.norm();
            break;
        }
        term = next;
        sum += term;
    }
    let lead = Complex64::new(0.0, 0.5 * FRAC_2_SQRT_PI) / z;
    let w = lead * sum;
    let est = lead.norm() * omitted + 8.0 * f64::EPSILON * w.norm();
    OracleResult {
        v: w.re,
        l: w.im,
        est_abs_err: est,
        method: OracleMethod::Asymptotic,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_is_one() {
        let r = oracle_w(ComplexPoint::new(0.0, 0.0), 1e-14).unwrap();
        assert!((r.v - 1.0).abs() <= 1e-15);
        assert_eq!(r.l, 0.0);
        assert!(r.est_abs_err <= 1e-15);
    }

    #[test]
    fn oscillatory_region_is_refused() {
        let e = oracle_w(ComplexPoint::new(20.0, 20.0), 1.0).unwrap_err();
        assert!(matches!(e, OracleError::ConvergenceFailure { .. }));
    }

    #[test]
    fn gap_between_methods_is_refused() {
        let e = oracle_w(ComplexPoint::new(60.0, 1.0), 1.0).unwrap_err();
        assert!(matches!(e, OracleError::OutsideRegion { .. }));
        assert!(oracle_w(ComplexPoint::new(1.0, -1.0), 1.0).is_err());
    }

    #[test]
    fn erfcx_at_one() {
        // 50-digit value of e·erfc(1).
        let q = erfcx_quadrature(1.0);
        assert!((q.value - 0.427583576155807).abs() <= q.abs_err.max(1e-16));
    }

    #[test]
    fn methods_are_parity_consistent() {
        let a = oracle_w_default(ComplexPoint::new(1.5, 0.7)).unwrap();
        let b = oracle_w_default(ComplexPoint::new(-1.5, 0.7)).unwrap();
        assert_eq!(a.v, b.v);
        assert_eq!(a.l, -b.l);
    }
}
