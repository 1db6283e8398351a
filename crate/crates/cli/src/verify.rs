use std::fmt;

use faddeyeva::{faddeyeva, AccuracyControl, ComplexPoint, FaddeyevaValue};
use faddeyeva_oracle::oracle_w_default;

use crate::golden::{GoldenPoint, GOLDEN};
use crate::CliError;

/// Relative agreement required between the engine and the quadrature
/// reference wherever the latter converges.
pub const ORACLE_TOLERANCE: f64 = 1e-12;

/// Outcome at one reference point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyRow {
    pub point: GoldenPoint,
    pub got: FaddeyevaValue,
    pub err_v: f64,
    pub err_l: Option<f64>,
    pub tolerance: (f64, f64),
    /// Largest relative engine-vs-oracle deviation, when the oracle converged.
    pub oracle_err: Option<f64>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub rows: Vec<VerifyRow>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

fn rel(got: f64, want: f64) -> f64 {
    ((got - want) / want).abs()
}

fn check(point: &GoldenPoint, ctl: &AccuracyControl) -> Result<VerifyRow, CliError> {
    let z = ComplexPoint::new(point.x, point.y);
    let got = faddeyeva(z, ctl)?;
    let tolerance = point.verify_tolerance();
    let err_v = rel(got.v, point.v);
    let err_l = point.l.map(|l| rel(got.l, l));
    let oracle_err = oracle_w_default(z).ok().map(|r| {
        let ev = rel(got.v, r.v);
        if r.l == 0.0 {
            ev.max(got.l.abs())
        } else {
            ev.max(rel(got.l, r.l))
        }
    });
    let pass = err_v <= tolerance.0
        && err_l.is_none_or(|e| e <= tolerance.1)
        && oracle_err.is_none_or(|e| e <= ORACLE_TOLERANCE);
    Ok(VerifyRow {
        point: *point,
        got,
        err_v,
        err_l,
        tolerance,
        oracle_err,
        pass,
    })
}

/// Checks every reference point at the most accurate setting.
pub fn cmd_verify() -> Result<VerifyReport, CliError> {
    let ctl = AccuracyControl::most_accurate();
    let rows = GOLDEN
        .iter()
        .map(|p| check(p, &ctl))
        .collect::<Result<_, _>>()?;
    Ok(VerifyReport { rows })
}

/// Per-point table, then `key=value` totals.
impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>10} {:>8}  {:>9} {:>9}  {:>9} {:>9}  {:>9}  result",
            "x", "y", "err V", "tol V", "err L", "tol L", "oracle"
        )?;
        let opt = |v: Option<f64>| v.map_or_else(|| "-".to_string(), |e| format!("{e:.2e}"));
        for r in &self.rows {
            writeln!(
                f,
                "{:>10.3e} {:>8.1e}  {:>9.2e} {:>9.2e}  {:>9} {:>9.2e}  {:>9}  {}",
                r.point.x,
                r.point.y,
                r.err_v,
                r.tolerance.0,
                opt(r.err_l),
                r.tolerance.1,
                opt(r.oracle_err),
                if r.pass { "PASS" } else { "FAIL" }
            )?;
        }
        let failed = self.rows.iter().filter(|r| !r.pass).count();
        let oracle = self.rows.iter().filter(|r| r.oracle_err.is_some()).count();
        writeln!(f, "verify.points={}", self.rows.len())?;
        writeln!(f, "verify.oracle_checked={oracle}")?;
        writeln!(f, "verify.failed={failed}")?;
        write!(
            f,
            "verify.result={}",
            if self.pass() { "PASS" } else { "FAIL" }
        )
    }
}
