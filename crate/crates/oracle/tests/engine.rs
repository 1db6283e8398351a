//! The engine and its scalar kernels checked against the independent
//! references.

// Reference values keep every printed digit.
#![allow(clippy::excessive_precision)]

use faddeyeva::{
    accuracy_from_tiny, compute_sums, erfcx_real, faddeyeva, platform_limits, AccuracyControl,
    ComplexPoint, SumSet,
};
use faddeyeva_oracle::{
    erfc_quadrature, erfcx_quadrature, laplace_integral, oracle_sums_naive, oracle_w_default,
    segment_quadrature,
};
use proptest::prelude::*;

const EPS: f64 = f64::EPSILON;

fn rel(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        ((got - want) / want).abs()
    }
}

fn sums_agree(fast: &SumSet, slow: &SumSet, tol: f64) -> Result<(), String> {
    let pairs = [
        ("s1", fast.s1, slow.s1),
        ("s2", fast.s2, slow.s2),
        ("s3", fast.s3, slow.s3),
        ("s4", fast.s4, slow.s4),
        ("s5", fast.s5, slow.s5),
    ];
    // Below R_min a sum is machine-truncated, so compare absolutely there.
    for (name, f, s) in pairs {
        let err = (f - s).abs() / s.abs().max(f64::MIN_POSITIVE);
        if err > tol {
            return Err(format!("{name}: {f:e} vs {s:e} ({err:.2e})"));
        }
    }
    Ok(())
}

#[test]
fn engine_matches_quadrature_at_one_plus_i() {
    let z = ComplexPoint::new(1.0, 1.0);
    let got = faddeyeva(z, &AccuracyControl::most_accurate()).unwrap();
    let want = oracle_w_default(z).unwrap();
    assert!(rel(got.v, want.v) <= 1e-12);
    assert!(rel(got.l, want.l) <= 1e-12);
    // Independent closed-form digits for w(1 + i).
    assert!(rel(got.v, 0.30474420525691259) <= 1e-14);
    assert!(rel(got.l, 0.20821893820283163) <= 1e-14);
}

#[test]
fn erfcx_at_documented_points() {
    let one = erfcx_quadrature(1.0);
    assert!(rel(erfcx_real(1.0).unwrap(), one.value) <= 1e-14);
    assert!(one.abs_err <= 5e-15 * one.value);
    let far = erfcx_real(1e8).unwrap();
    let lead = 1.0 / (1e8 * std::f64::consts::PI.sqrt());
    assert!(rel(far, lead) <= 1e-13);
    assert_eq!(erfcx_real(0.0).unwrap(), 1.0);
}

/// Ten thousand log-spaced arguments over `[1e-8, 1e8]`.
#[test]
fn erfcx_on_a_log_grid() {
    let n = 10_000;
    let mut worst = (0.0, 0.0);
    let mut coarsest = 0.0f64;
    for k in 0..n {
        let y = 10f64.powf(-8.0 + 16.0 * k as f64 / (n - 1) as f64);
        let q = erfcx_quadrature(y);
        let e = rel(erfcx_real(y).unwrap(), q.value);
        coarsest = coarsest.max(q.abs_err / q.value);
        if e > worst.0 {
            worst = (e, y);
        }
    }
    eprintln!(
        "erfcx: worst {:.2e} at y={}, reference estimate {coarsest:.2e}",
        worst.0, worst.1
    );
    assert!(coarsest <= 1e-14, "reference estimate {coarsest:.2e}");
    assert!(worst.0 <= 1e-14, "worst {:.2e} at y={}", worst.0, worst.1);
}

/// `e^{−y²}` with the square carried exactly.
fn gauss(y: f64) -> f64 {
    let p = y * y;
    (-p).exp() * (1.0 - y.mul_add(y, -p))
}

#[test]
fn erfcx_times_gaussian_is_erfc() {
    for k in 0..=500 {
        let y = 5.0 * k as f64 / 500.0;
        let q = erfc_quadrature(y);
        let got = erfcx_real(y).unwrap() * gauss(y);
        let slack = q.abs_err / q.value;
        assert!(
            rel(got, q.value) <= 4.0 * EPS + slack,
            "y={y}: {:.2e}",
            rel(got, q.value)
        );
    }
}

#[test]
fn sums_match_direct_summation_inside_the_near_field() {
    let ctl = accuracy_from_tiny(1.43e-17);
    assert!((ctl.a - 0.5).abs() < 1e-12);
    let fast = compute_sums(2.0, 0.5, &ctl, &platform_limits()).unwrap();
    let slow = oracle_sums_naive(2.0, 0.5, ctl.a, 200);
    sums_agree(&fast, &slow, 4.0 * EPS).unwrap();
}

#[test]
fn sums_match_direct_summation_beyond_the_underflow_threshold() {
    let ctl = AccuracyControl::most_accurate();
    let fast = compute_sums(30.0, 1.0, &ctl, &platform_limits()).unwrap();
    assert_eq!((fast.s1, fast.s2, fast.s4), (0.0, 0.0, 0.0));
    assert!(fast.s3 > 0.0 && fast.s5 > 0.0);
    let slow = oracle_sums_naive(30.0, 1.0, ctl.a, 180);
    assert!(rel(fast.s3, slow.s3) <= 4.0 * EPS);
    assert!(rel(fast.s5, slow.s5) <= 4.0 * EPS);
}

#[test]
fn two_quadrature_routes_agree_where_both_apply() {
    for &(x, y) in &[(0.1, 0.5), (0.5, 2.0), (1.0, 1.0), (0.2, 8.0), (1e-3, 20.0)] {
        let a = laplace_integral(x, y);
        let b = segment_quadrature(x, y);
        let tol = 2.0 * a.est_abs_err.max(b.est_abs_err);
        assert!((a.v - b.v).abs() <= tol, "V at ({x}, {y})");
        assert!((a.l - b.l).abs() <= tol, "L at ({x}, {y})");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn engine_within_oracle_tolerance(x in 0.0..40.0f64, ye in -20.0..1.5f64) {
        let y = 10f64.powf(ye);
        let z = ComplexPoint::new(x, y);
        if let Ok(want) = oracle_w_default(z) {
            let got = faddeyeva(z, &AccuracyControl::most_accurate()).unwrap();
            let scale = want.v.abs().max(want.l.abs());
            prop_assert!((got.v - want.v).abs() <= 1e-13 * scale + want.est_abs_err, "V at ({x}, {y})");
            prop_assert!((got.l - want.l).abs() <= 1e-13 * scale + want.est_abs_err, "L at ({x}, {y})");
        }
    }

    #[test]
    fn sums_match_direct_summation(x in 0.0..60.0f64, y in 0.0..20.0f64, t in -17.0..-4.0f64) {
        prop_assume!(x > 0.0);
        let ctl = accuracy_from_tiny(10f64.powf(t));
        let fast = compute_sums(x, y, &ctl, &platform_limits()).unwrap();
        let n_max = ((x + 40.0) / ctl.a).ceil() as usize;
        let slow = oracle_sums_naive(x, y, ctl.a, n_max);
        // Truncation at `conv_tol` is part of the fast sums' contract.
        let tol = 4.0 * EPS + 2.0 * ctl.conv_tol;
        if let Err(m) = sums_agree(&fast, &slow, tol) {
            if x < platform_limits().x_big {
                return Err(TestCaseError::fail(format!("({x}, {y}): {m}")));
            }
            prop_assert!(rel(fast.s3, slow.s3) <= tol && rel(fast.s5, slow.s5) <= tol);
        }
    }
}

/// `−erfcx(y) + (a/(πy))·[1 + 2Σ e^{−a²n²}/(1 + a²n²/y²)]`, the leading
/// combination of `L` that the engine drops for `y ≥ 5`, with the
/// uncertainty of its two terms.
fn leading_bracket(y: f64, a: f64) -> (f64, f64) {
    let e = erfcx_quadrature(y);
    let mut s = 0.0;
    let mut c = 0.0;
    for n in (1..400).rev() {
        let an = a * n as f64;
        let t = (-an * an).exp() / (1.0 + an * an / (y * y));
        let u = s + t;
        c += if s.abs() >= t.abs() {
            (s - u) + t
        } else {
            (t - u) + s
        };
        s = u;
    }
    let series = a / (std::f64::consts::PI * y) * (1.0 + 2.0 * (s + c));
    (series - e.value, e.abs_err + 4.0 * EPS * series)
}

/// Dropping the bracket at `y = 5` costs no more than its terms' own
/// rounding for `a ≤ 1/2`, and a small multiple of the expansion error
/// beyond.
#[test]
fn dropped_bracket_is_negligible_at_the_threshold() {
    let ex = erfcx_real(5.0).unwrap();
    for a in [0.36, 0.4, 0.45, 0.5] {
        let (b, noise) = leading_bracket(5.0, a);
        assert!(b.abs() <= noise, "a={a}: {b:e} vs noise {noise:e}");
    }
    for a in [0.55, 0.6, 0.7, 0.8, 0.9, 1.0] {
        let (b, noise) = leading_bracket(5.0, a);
        let bound = 16.0 * faddeyeva::expansion_error(a) * ex + noise;
        assert!(b.abs() <= bound, "a={a}: {b:e} vs {bound:e}");
    }
}

/// Just above the threshold `L/x` itself cancels to about a fiftieth of
/// its terms, so the imaginary part keeps roughly 13 digits.
#[test]
fn imaginary_part_near_the_threshold() {
    let ctl = AccuracyControl::most_accurate();
    for (x, l) in [(1e-3, 2.1332789011929522e-5), (0.1, 0.0021325263291299995)] {
        let got = faddeyeva(ComplexPoint::new(x, 5.0), &ctl).unwrap();
        assert!(rel(got.l, l) <= 1e-13, "x={x}: {:.2e}", rel(got.l, l));
    }
}

#[test]
fn subnormal_sums_just_below_the_underflow_threshold() {
    let ctl = accuracy_from_tiny(10f64.powf(-15.888930186759328));
    let x = 26.58176403610012;
    let fast = compute_sums(x, 0.0, &ctl, &platform_limits()).unwrap();
    let slow = oracle_sums_naive(x, 0.0, ctl.a, ((x + 40.0) / ctl.a).ceil() as usize);
    assert!(slow.s4 < f64::MIN_POSITIVE);
    sums_agree(&fast, &slow, 4.0 * EPS + 2.0 * ctl.conv_tol).unwrap();
}
