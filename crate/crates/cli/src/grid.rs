//! Rectangular evaluation grids: linear in `x`, logarithmic in `y`.

use std::fmt;
use std::str::FromStr;

use faddeyeva::ComplexPoint;

use crate::error::CliError;

/// A grid of `x_count` linearly spaced `x` values by `y_count` values
/// `10^e` with `e` linearly spaced. Both axes include their endpoints.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub x_start: f64,
    pub x_stop: f64,
    pub x_count: usize,
    pub y_exp_start: f64,
    pub y_exp_stop: f64,
    pub y_count: usize,
}

impl GridSpec {
    /// The full sweep: `x ∈ [−200, 200]` at step 0.01, `y = 10^[−20, 4]` with
    /// 71 values.
    pub const FULL: GridSpec = GridSpec {
        x_start: -200.0,
        x_stop: 200.0,
        x_count: 40_001,
        y_exp_start: -20.0,
        y_exp_stop: 4.0,
        y_count: 71,
    };

    /// The full sweep with `x` ten times coarser, for routine runs.
    pub const DESK: GridSpec = GridSpec {
        x_count: 4_001,
        ..GridSpec::FULL
    };

    pub fn new(x: (f64, f64, usize), y_exp: (f64, f64, usize)) -> Result<GridSpec, CliError> {
        let g = GridSpec {
            x_start: x.0,
            x_stop: x.1,
            x_count: x.2,
            y_exp_start: y_exp.0,
            y_exp_stop: y_exp.1,
            y_count: y_exp.2,
        };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.x_count == 0 || self.y_count == 0 {
            return Err(CliError::Usage("grid counts must be at least 1".into()));
        }
        let ends = [self.x_start, self.x_stop, self.y_exp_start, self.y_exp_stop];
        if ends.iter().any(|v| !v.is_finite()) {
            return Err(CliError::Usage("grid bounds must be finite".into()));
        }
        Ok(())
    }

    /// `x_start + k·(x_stop − x_start)/(x_count − 1)`.
    pub fn x_at(&self, k: usize) -> f64 {
        if self.x_count == 1 {
            return self.x_start;
        }
        self.x_start + k as f64 * (self.x_stop - self.x_start) / (self.x_count - 1) as f64
    }

    /// `10^(y_exp_start + j·(y_exp_stop − y_exp_start)/(y_count − 1))`.
    pub fn y_at(&self, j: usize) -> f64 {
        let e = if self.y_count == 1 {
            self.y_exp_start
        } else {
            self.y_exp_start
                + j as f64 * (self.y_exp_stop - self.y_exp_start) / (self.y_count - 1) as f64
        };
        10f64.powf(e)
    }

    pub fn xs(&self) -> Vec<f64> {
        (0..self.x_count).map(|k| self.x_at(k)).collect()
    }

    pub fn ys(&self) -> Vec<f64> {
        (0..self.y_count).map(|j| self.y_at(j)).collect()
    }

    pub fn len(&self) -> usize {
        self.x_count * self.y_count
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Point `i` in row-major order, `y` outer and `x` inner.
    pub fn point(&self, i: usize) -> ComplexPoint {
        ComplexPoint::new(self.x_at(i % self.x_count), self.y_at(i / self.x_count))
    }

    /// All points in row-major order, `y` outer and `x` inner.
    pub fn points(&self) -> Vec<ComplexPoint> {
        let xs = self.xs();
        self.ys()
            .into_iter()
            .flat_map(|y| xs.iter().map(move |&x| ComplexPoint::new(x, y)))
            .collect()
    }
}

/// `xstart:xstop:xcount,yexpstart:yexpstop:ycount`.
impl FromStr for GridSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || {
            CliError::Usage(format!(
                "grid `{s}` is not xstart:xstop:xcount,yexpstart:yexpstop:ycount"
            ))
        };
        let (xs, ys) = s.split_once(',').ok_or_else(bad)?;
        let axis = |part: &str| -> Result<(f64, f64, usize), CliError> {
            let f: Vec<&str> = part.split(':').collect();
            if f.len() != 3 {
                return Err(bad());
            }
            let start = f[0].trim().parse().map_err(|_| bad())?;
            let stop = f[1].trim().parse().map_err(|_| bad())?;
            let count = f[2].trim().parse().map_err(|_| bad())?;
            Ok((start, stop, count))
        };
        GridSpec::new(axis(xs)?, axis(ys)?)
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{},{}:{}:{}",
            self.x_start,
            self.x_stop,
            self.x_count,
            self.y_exp_start,
            self.y_exp_stop,
            self.y_count
        )
    }
}
