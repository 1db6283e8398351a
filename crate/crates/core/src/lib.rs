//! The Faddeyeva function `w(z) = e^{−z²}·erfc(−iz)` of a complex argument.
//!
//! Its real and imaginary parts `V` and `L` are the Voigt functions. The
//! evaluation uses exponential series whose length is controlled by a single
//! accuracy knob, `tiny`: the most accurate setting reaches full double
//! precision, and coarser settings trade digits for speed.
//!
//! ```
//! use faddeyeva::{accuracy_from_tiny, faddeyeva, ComplexPoint};
//!
//! let ctl = accuracy_from_tiny(1e-8);
//! let w = faddeyeva(ComplexPoint::new(2.0, 1.0), &ctl).unwrap();
//! assert!(w.v > 0.0 && w.l > 0.0);
//! ```

mod accuracy;
mod derivatives;
mod engine;
mod error;
mod exact;
mod scalar;

pub use accuracy::{accuracy_from_tiny, expansion_error, tiny_min, AccuracyControl, TINY_MAX};
pub use derivatives::{derivatives_at, DerivativeSet};
pub use engine::{
    assemble_first_quadrant, compute_sums, faddeyeva, n_cut_sigma1, n_cut_sigma24, ComplexPoint,
    FaddeyevaValue, SumSet, BRACKET_ZERO_Y, FAR_FIELD, X_SINH,
};
pub use error::Error;
pub use scalar::{erfcx_real, platform_limits, sinc_safe, PlatformLimits};
