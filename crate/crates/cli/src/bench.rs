use std::fmt;
use std::hint::black_box;
use std::time::{Duration, Instant};

use faddeyeva::{faddeyeva, AccuracyControl, ComplexPoint};
use rayon::prelude::*;

use crate::{control_for, sci, CliError, GridSpec};

/// Fewer repeats than this mark a report as low confidence.
pub const CONFIDENT_REPEATS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Threading {
    Single,
    Parallel,
}

/// Timing for one `tiny` value.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub tiny: f64,
    pub median: Duration,
    /// `median` over the median at the most accurate setting.
    pub ratio: f64,
    pub samples: Vec<Duration>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchReport {
    pub points: usize,
    pub repeats: usize,
    pub threading: Threading,
    pub rows: Vec<BenchRow>,
    pub low_confidence: bool,
}

fn sweep(points: &[ComplexPoint], ctl: &AccuracyControl, threading: Threading) -> f64 {
    let eval = |z: &ComplexPoint| faddeyeva(*z, ctl).map_or(0.0, |w| w.v + w.l);
    match threading {
        Threading::Single => points.iter().map(eval).sum(),
        Threading::Parallel => points.par_iter().map(eval).sum(),
    }
}

fn median(samples: &[Duration]) -> Duration {
    let mut s = samples.to_vec();
    s.sort_unstable();
    let n = s.len();
    if n % 2 == 1 {
        s[n / 2]
    } else {
        (s[n / 2 - 1] + s[n / 2]) / 2
    }
}

fn time_once(points: &[ComplexPoint], ctl: &AccuracyControl, threading: Threading) -> Duration {
    let start = Instant::now();
    black_box(sweep(black_box(points), ctl, threading));
    start.elapsed()
}

/// Median whole-grid wall time for each `tiny`, after one untimed pass.
///
/// Settings are timed in interleaved rounds so that drift in machine load
/// affects all of them alike.
pub fn cmd_bench(
    grid: &GridSpec,
    tiny_list: &[f64],
    repeats: usize,
    threading: Threading,
) -> Result<BenchReport, CliError> {
    if tiny_list.is_empty() {
        return Err(CliError::Usage(
            "bench needs at least one tiny value".into(),
        ));
    }
    if repeats == 0 {
        return Err(CliError::Usage("bench needs at least one repeat".into()));
    }
    let points = grid.points();
    let base = AccuracyControl::most_accurate();
    let mut settings: Vec<AccuracyControl> =
        tiny_list.iter().map(|&t| control_for(Some(t))).collect();
    settings.push(base);

    for ctl in &settings {
        black_box(sweep(&points, ctl, threading));
    }
    let mut samples = vec![Vec::with_capacity(repeats); settings.len()];
    for _ in 0..repeats {
        for (ctl, out) in settings.iter().zip(samples.iter_mut()) {
            out.push(time_once(&points, ctl, threading));
        }
    }
    let base_median = median(samples.last().expect("baseline is always timed"));
    let rows = tiny_list
        .iter()
        .zip(&samples)
        .map(|(&tiny, s)| {
            let m = median(s);
            BenchRow {
                tiny,
                median: m,
                ratio: m.as_secs_f64() / base_median.as_secs_f64().max(f64::MIN_POSITIVE),
                samples: s.clone(),
            }
        })
        .collect();
    Ok(BenchReport {
        points: points.len(),
        repeats,
        threading,
        rows,
        low_confidence: repeats < CONFIDENT_REPEATS,
    })
}

/// A human-readable table followed by `key=value` lines.
impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = match self.threading {
            Threading::Single => "single",
            Threading::Parallel => "parallel",
        };
        writeln!(
            f,
            "{} points, {} repeats, {mode}-threaded",
            self.points, self.repeats
        )?;
        if self.low_confidence {
            writeln!(
                f,
                "warning: low confidence, fewer than {CONFIDENT_REPEATS} repeats"
            )?;
        }
        writeln!(f, "{:>12}  {:>12}  {:>8}", "tiny", "median [s]", "ratio")?;
        for r in &self.rows {
            writeln!(
                f,
                "{:>12.3e}  {:>12.6}  {:>8.3}",
                r.tiny,
                r.median.as_secs_f64(),
                r.ratio
            )?;
        }
        for (i, r) in self.rows.iter().enumerate() {
            writeln!(
                f,
                "bench.{i}.tiny={} bench.{i}.median_s={} bench.{i}.ratio={}",
                sci(r.tiny),
                sci(r.median.as_secs_f64()),
                sci(r.ratio)
            )?;
        }
        write!(f, "bench.low_confidence={}", self.low_confidence)
    }
}
