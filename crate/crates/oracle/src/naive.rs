//! Term-by-term evaluation of the five exponential sums: a fresh exponential
//! per term per sum, indices in ascending order, compensated accumulation.

use faddeyeva::SumSet;

use crate::quad::CompensatedSum;

/// `v` as an unevaluated sum `(hi, lo)`.
type Split = (f64, f64);

fn mul_exact(a: f64, b: f64) -> Split {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

fn add_split(a: Split, b: Split) -> Split {
    let s = a.0 + b.0;
    let v = s - a.0;
    let e = (a.0 - (s - v)) + (b.0 - v) + a.1 + b.1;
    (s + e, e - ((s + e) - s))
}

fn square_split(a: Split) -> Split {
    let (p, e) = mul_exact(a.0, a.0);
    add_split((p, e), (2.0 * a.0 * a.1, 0.0))
}

/// `e^{−(hi+lo)}`.
fn exp_neg(arg: Split) -> f64 {
    (-arg.0).exp() * (1.0 - arg.1)
}

/// Sums Σ1–Σ5 at `(x, y)` with expansion parameter `a` over `n = 1..=n_max`.
///
/// `s1_reduced` holds `Σ e^{−a²n²}/D(n)` and `exp_neg_x2` holds `e^{−x²}`;
/// the odd-part accumulator is not formed.
pub fn oracle_sums_naive(x: f64, y: f64, a: f64, n_max: usize) -> SumSet {
    assert!(n_max >= 1, "n_max must be at least 1");
    let x2 = mul_exact(x, x);
    let y2 = mul_exact(y, y);
    let mut sums = [CompensatedSum::default(); 6];

    for n in 1..=n_max {
        let an = mul_exact(a, n as f64);
        let an2 = square_split(an);
        let denom = {
            let d = add_split(an2, y2);
            d.0 + d.1
        };
        let plus = square_split(add_split(an, (x, 0.0)));
        let minus = square_split(add_split(an, (-x, 0.0)));

        let e1 = exp_neg(add_split(an2, x2));
        let e2 = exp_neg(plus);
        let e3 = exp_neg(minus);
        let an_v = an.0 + an.1;

        sums[0].add(e1 / denom);
        sums[1].add(e2 / denom);
        sums[2].add(e3 / denom);
        sums[3].add(an_v * e2 / denom);
        sums[4].add(an_v * e3 / denom);
        sums[5].add(exp_neg(an2) / denom);
    }

    SumSet {
        s1: sums[0].value(),
        s2: sums[1].value(),
        s3: sums[2].value(),
        s4: sums[3].value(),
        s5: sums[4].value(),
        n_used: n_max,
        s1_reduced: sums[5].value(),
        exp_neg_x2: exp_neg(x2),
        half_odd_diff: None,
    }
}
