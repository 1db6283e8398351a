use std::fmt;

use faddeyeva::{
    derivatives_at, faddeyeva, AccuracyControl, ComplexPoint, DerivativeSet, FaddeyevaValue,
};

use crate::{sci, CliError};

/// Result of a single-point evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalRecord {
    pub z: ComplexPoint,
    pub w: FaddeyevaValue,
    pub derivatives: Option<DerivativeSet>,
    pub ctl: AccuracyControl,
}

/// Evaluates `w` at `(x, y)`, with the four partials when requested.
pub fn cmd_eval(
    x: f64,
    y: f64,
    ctl: &AccuracyControl,
    with_derivatives: bool,
) -> Result<EvalRecord, CliError> {
    let z = ComplexPoint::new(x, y);
    let w = faddeyeva(z, ctl)?;
    Ok(EvalRecord {
        z,
        w,
        derivatives: with_derivatives.then(|| derivatives_at(z, w)),
        ctl: *ctl,
    })
}

impl fmt::Display for EvalRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ctl.clamped {
            writeln!(
                f,
                "warning: tiny={:e} is outside the accepted range; using tiny={:e}",
                self.ctl.tiny_requested, self.ctl.tiny_effective
            )?;
        }
        write!(
            f,
            "x={} y={} V={} L={}",
            sci(self.z.x),
            sci(self.z.y),
            sci(self.w.v),
            sci(self.w.l)
        )?;
        if let Some(d) = self.derivatives {
            write!(
                f,
                "\ndV/dx={} dV/dy={} dL/dx={} dL/dy={}",
                sci(d.dv_dx),
                sci(d.dv_dy),
                sci(d.dl_dx),
                sci(d.dl_dy)
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::control_for;

    #[test]
    fn origin() {
        let r = cmd_eval(0.0, 0.0, &control_for(None), true).unwrap();
        let text = r.to_string();
        assert!(text.contains("V=1.0000000000000000e0"), "{text}");
        assert!(text.contains("L=0.0000000000000000e0"), "{text}");
        assert!(text.contains("dV/dx=0.0000000000000000e0"), "{text}");
        assert!(!text.contains("warning"));
    }

    #[test]
    fn clamping_is_reported() {
        let r = cmd_eval(1.0, 1.0, &control_for(Some(1.0)), false).unwrap();
        assert!(r.to_string().starts_with("warning:"));
    }

    #[test]
    fn overflow_below_the_axis() {
        let e = cmd_eval(1.0, -40.0, &control_for(None), false).unwrap_err();
        assert_eq!(e.exit_code(), 3);
    }
}
