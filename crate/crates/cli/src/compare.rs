use std::fmt;

use faddeyeva::{faddeyeva, AccuracyControl, ComplexPoint, FaddeyevaValue};
use faddeyeva_oracle::oracle_w_default;
use rayon::prelude::*;

use crate::{sci, CliError, GridSpec};

/// What the tested setting is compared against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reference {
    /// The engine at its most accurate setting.
    TinyMin,
    /// The quadrature reference; points it cannot certify are skipped.
    Oracle,
}

/// Largest relative deviations over a grid.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ErrorSummary {
    pub max_rel_v: f64,
    pub max_rel_l: f64,
    pub argmax_v: ComplexPoint,
    pub argmax_l: ComplexPoint,
    pub points_evaluated: usize,
    pub points_skipped: usize,
}

/// Per-point relative deviations; a component with a zero reference is
/// `None`, and a point with no usable reference is `None` altogether.
type PointErrors = Option<(Option<f64>, Option<f64>)>;

fn rel(got: f64, want: f64) -> Option<f64> {
    (want != 0.0).then(|| ((got - want) / want).abs())
}

fn reference_at(
    z: ComplexPoint,
    reference: Reference,
    base: &AccuracyControl,
) -> Option<FaddeyevaValue> {
    match reference {
        Reference::TinyMin => faddeyeva(z, base).ok(),
        Reference::Oracle => oracle_w_default(z)
            .ok()
            .map(|r| FaddeyevaValue { v: r.v, l: r.l }),
    }
}

fn point_errors(
    z: ComplexPoint,
    test: &AccuracyControl,
    reference: Reference,
    base: &AccuracyControl,
) -> Result<PointErrors, CliError> {
    let Some(want) = reference_at(z, reference, base) else {
        return Ok(None);
    };
    let got = faddeyeva(z, test)?;
    let (ev, el) = (rel(got.v, want.v), rel(got.l, want.l));
    Ok((ev.is_some() || el.is_some()).then_some((ev, el)))
}

/// Relative deviation of the engine at `test` from `reference` over `grid`.
///
/// Reductions run in grid order, so ties resolve to the first point.
pub fn cmd_compare(
    grid: &GridSpec,
    test: &AccuracyControl,
    reference: Reference,
) -> Result<ErrorSummary, CliError> {
    let base = AccuracyControl::most_accurate();
    let errors: Vec<PointErrors> = (0..grid.len())
        .into_par_iter()
        .map(|i| point_errors(grid.point(i), test, reference, &base))
        .collect::<Result<_, _>>()?;

    let origin = grid.point(0);
    let mut s = ErrorSummary {
        max_rel_v: 0.0,
        max_rel_l: 0.0,
        argmax_v: origin,
        argmax_l: origin,
        points_evaluated: 0,
        points_skipped: 0,
    };
    for (i, e) in errors.into_iter().enumerate() {
        let Some((ev, el)) = e else {
            s.points_skipped += 1;
            continue;
        };
        s.points_evaluated += 1;
        if let Some(ev) = ev.filter(|&v| v > s.max_rel_v) {
            s.max_rel_v = ev;
            s.argmax_v = grid.point(i);
        }
        if let Some(el) = el.filter(|&v| v > s.max_rel_l) {
            s.max_rel_l = el;
            s.argmax_l = grid.point(i);
        }
    }
    Ok(s)
}

/// `key=value` lines.
impl fmt::Display for ErrorSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "max_rel_v={}", sci(self.max_rel_v))?;
        writeln!(
            f,
            "argmax_v={},{}",
            sci(self.argmax_v.x),
            sci(self.argmax_v.y)
        )?;
        writeln!(f, "max_rel_l={}", sci(self.max_rel_l))?;
        writeln!(
            f,
            "argmax_l={},{}",
            sci(self.argmax_l.x),
            sci(self.argmax_l.y)
        )?;
        writeln!(f, "points_evaluated={}", self.points_evaluated)?;
        write!(f, "points_skipped={}", self.points_skipped)
    }
}
