//! Real scaled complementary error function `erfcx(y) = e^{y²}·erfc(y)`.
//!
//! Below [`SWITCH`] the value is a Taylor expansion about the nearest node
//! `j/4`. The node value is stored as a `hi + lo` pair together with its first
//! derivative; higher coefficients follow from the recurrence
//! `c_{k+1} = 2·(y_j·c_k + c_{k−1})/(k+1)`, which is the Taylor form of
//! `f'' = 2f + 2y·f'`. At or above the switch the Laplace continued fraction is
//! evaluated backwards with a depth that shrinks as `y` grows.

use std::f64::consts::FRAC_2_SQRT_PI;

use crate::Error;

/// Boundary between the Taylor and continued-fraction branches.
pub const SWITCH: f64 = 6.0;

const NODES_PER_UNIT: f64 = 4.0;

/// Coefficients beyond this degree are below `ε·erfcx` for `|t| ≤ 1/8`.
const DEGREE: usize = 16;

/// `(erfcx(j/4) hi, erfcx(j/4) lo, erfcx'(j/4))` for `j = 0..=24`.
const NODES: [(f64, f64, f64); 25] = [
    (1.0, 0.0, -FRAC_2_SQRT_PI),
    (
        0.7703465477309968,
        -1.1815041295276343e-17,
        -0.7432058932300142,
    ),
    (
        0.6156903441929259,
        -2.312175868623341e-17,
        -0.5126888229025867,
    ),
    (
        0.5069376502931449,
        -5.335681035462232e-17,
        -0.3679726916557954,
    ),
    (
        0.427583576155807,
        5.235737283314228e-18,
        -0.27321201478389856,
    ),
    (
        0.3678229164523611,
        1.387401093925035e-19,
        -0.20882187596460985,
    ),
    (
        0.3215854164543175,
        1.7007985607722196e-17,
        -0.16362291773256007,
    ),
    (
        0.2849722347374364,
        8.539813023973122e-18,
        -0.1309763455144852,
    ),
    (
        0.25539567631050575,
        -4.276022290165946e-18,
        -0.1067964618534896,
    ),
    (
        0.23108725873039188,
        -5.74762364596782e-18,
        -0.08848650280874916,
    ),
    (
        0.2108063640611436,
        -5.6277259093102524e-18,
        -0.07434734678979467,
    ),
    (
        0.1936620962790687,
        -1.2015846532739174e-17,
        -0.06323763756063484,
    ),
    (
        0.17900115118138996,
        -5.4272175920200274e-18,
        -0.05437226000717287,
    ),
    (
        0.16633534842682188,
        -6.133416339501975e-19,
        -0.047199402321170376,
    ),
    (
        0.1552936556088943,
        -1.355844542216092e-18,
        -0.041323577833252495,
    ),
    (
        0.14558972127503855,
        -1.3715647344444334e-17,
        -0.03645625753272353,
    ),
    (
        0.13699945762506138,
        7.196568139158719e-18,
        -0.032383506095021455,
    ),
    (
        0.12934527478598792,
        -1.2917508513157319e-17,
        -0.028944331414615332,
    ),
    (
        0.12248480427384142,
        -6.888693135744294e-18,
        -0.026015928630939815,
    ),
    (
        0.11630270721024731,
        -3.1774786879972914e-18,
        -0.02350344859816315,
    ),
    (
        0.11070463773306863,
        -1.832347493639739e-18,
        -0.02133278976482631,
    ),
    (
        0.1056127354688918,
        2.7634215791419046e-18,
        -0.01944544467214865,
    ),
    (
        0.10096221839949909,
        -4.702857612943069e-18,
        -0.017794764701022602,
    ),
    (
        0.09669877816971392,
        -1.7756572733539565e-18,
        -0.016343218143802483,
    ),
    (
        0.09277656780053835,
        6.215364755528485e-18,
        -0.015060353489052321,
    ),
];

/// `e^{y²}·erfc(y)` for finite `y ≥ 0`.
///
/// Strictly positive, strictly decreasing and never overflows; for large `y`
/// it approaches `1/(y·√π)`.
///
/// ```
/// use faddeyeva::erfcx_real;
/// assert_eq!(erfcx_real(0.0).unwrap(), 1.0);
/// assert!(erfcx_real(-1.0).is_err());
/// ```
pub fn erfcx_real(y: f64) -> Result<f64, Error> {
    if !y.is_finite() || y < 0.0 {
        return Err(Error::Domain(y));
    }
    Ok(erfcx_nonneg(y))
}

/// `erfcx` without argument checks; `y` must be finite and non-negative.
#[inline]
pub(crate) fn erfcx_nonneg(y: f64) -> f64 {
    if y < SWITCH {
        taylor(y)
    } else {
        continued_fraction(y)
    }
}

#[inline]
fn taylor(y: f64) -> f64 {
    let j = (y * NODES_PER_UNIT).round();
    let node = j / NODES_PER_UNIT;
    let t = y - node;
    let (c0_hi, c0_lo, c1) = NODES[j as usize];

    let mut c = [0.0; DEGREE + 1];
    c[0] = c0_hi + c0_lo;
    c[1] = c1;
    for k in 1..DEGREE {
        c[k + 1] = 2.0 * node.mul_add(c[k], c[k - 1]) / (k + 1) as f64;
    }
    let mut p = c[DEGREE];
    for &ck in c[1..DEGREE].iter().rev() {
        p = p.mul_add(t, ck);
    }
    c0_hi + t.mul_add(p, c0_lo)
}

#[inline]
fn continued_fraction(y: f64) -> f64 {
    // Depth for a truncation error below 1e-17: 15 at y = 6, 7 at y = 20.
    let depth = 5 + (80.0 / y).ceil() as u32;
    let mut tail = 0.0;
    for k in (1..=depth).rev() {
        tail = (0.5 * k as f64) / (y + tail);
    }
    0.5 * FRAC_2_SQRT_PI / (y + tail)
}
