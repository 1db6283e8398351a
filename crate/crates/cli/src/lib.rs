//! Harness behind the `faddeyeva` command: single-point evaluation, grid
//! sweeps, error summaries against a reference, timing, and verification
//! against published values.
//!
//! Grid work is spread across threads; results are always gathered in grid
//! order, so every output is independent of scheduling.

mod bench;
mod compare;
mod error;
mod eval;
pub mod golden;
mod grid;
mod sweep;
mod verify;

pub use bench::{cmd_bench, BenchReport, BenchRow, Threading};
pub use compare::{cmd_compare, ErrorSummary, Reference};
pub use error::{exit, CliError};
pub use eval::{cmd_eval, EvalRecord};
pub use grid::GridSpec;
pub use sweep::{cmd_grid, write_grid, GRID_HEADER};
pub use verify::{cmd_verify, VerifyReport, VerifyRow};

use faddeyeva::{accuracy_from_tiny, AccuracyControl};

/// Accuracy settings for an optional `--tiny`; absent means most accurate.
pub fn control_for(tiny: Option<f64>) -> AccuracyControl {
    tiny.map_or_else(AccuracyControl::most_accurate, accuracy_from_tiny)
}

/// Scientific notation with 17 significant digits, enough to round-trip.
pub fn sci(v: f64) -> String {
    format!("{v:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_round_trip() {
        for v in [
            0.1,
            1.0 / 3.0,
            5.792460778844116e-18,
            f64::MIN_POSITIVE,
            -2.5,
        ] {
            let s = sci(v);
            assert_eq!(s.parse::<f64>().unwrap(), v);
            let mantissa = s.split('e').next().unwrap().trim_start_matches('-');
            assert_eq!(mantissa.replace('.', "").len(), 17);
        }
    }
}
