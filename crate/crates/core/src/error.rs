use thiserror::Error;

/// Failures reported by the evaluation routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A coordinate was NaN or infinite.
    #[error("non-finite input point ({x}, {y})")]
    InvalidInput { x: f64, y: f64 },

    /// Below the real axis `e^{y²−x²}` exceeds the largest finite double.
    #[error("w({x} {y:+}i) overflows: y² − x² exceeds ln(R_max)")]
    OverflowDomain { x: f64, y: f64 },

    /// `erfcx_real` was called outside `[0, ∞)`.
    #[error("erfcx argument {0} is outside [0, inf)")]
    Domain(f64),

    /// A routine was called outside its documented precondition.
    #[error("precondition violated: {0}")]
    Precondition(&'static str),

    /// The series loop reached its hard cycle cap without converging.
    #[error("series loop hit its cap of {cap} cycles at ({x}, {y})")]
    LoopCap { cap: usize, x: f64, y: f64 },
}
