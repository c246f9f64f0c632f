use num_complex::Complex64;
use thiserror::Error;

use crate::radical::{IterationTrace, RootEstimate};

/// Errors shared by the reduction, radical-iteration, bisection and oracle
/// paths.
#[derive(Debug, Error)]
pub enum Error {
    /// An input parameter is outside the range a routine supports.
    #[error("out of range: {0}")]
    OutOfRange(&'static str),

    /// A coefficient violates a structural precondition (e.g. a = 0).
    #[error("invalid coefficient: {0}")]
    InvalidCoefficient(&'static str),

    /// The iteration map was evaluated at a point where it is undefined
    /// (u + y = 0). Cannot occur along the iteration from the standard
    /// starting point, but guarded for arbitrary callers.
    #[error("degenerate input: u + y = 0")]
    DegenerateInput,

    /// The fixed-point iteration hit the iteration cap before the step-size
    /// tolerance was met; usually means the tolerance is below achievable
    /// precision. Carries the best estimate and its trace.
    #[error("iteration cap reached before convergence ({} steps)", estimate.iterations)]
    MaxIterExceeded {
        estimate: Box<RootEstimate>,
        trace: IterationTrace,
    },

    /// The angular function was evaluated exactly on a pole (sin(5a) = 0).
    #[error("angular function evaluated exactly on a pole")]
    PoleEvaluation,

    /// No sign change was found while bracketing inside an angular interval;
    /// signals parameters outside the method's usable domain.
    #[error("no bracket found in angular interval k={k}")]
    BracketFailure { k: i32 },

    /// A mapped or polished root failed its residual check.
    #[error("residual {residual:.3e} exceeds tolerance {tol:.3e} at {value}")]
    ResidualTooLarge {
        value: Complex64,
        residual: f64,
        tol: f64,
    },

    /// The root recovered through coefficient relations failed its residual
    /// check, which signals the other four roots are off.
    #[error("vieta-derived root failed residual check: {residual:.3e} > {tol:.3e}")]
    VietaResidualFailure { residual: f64, tol: f64 },

    /// The simultaneous-iteration oracle did not converge.
    #[error("oracle did not converge within the sweep limit")]
    NoConvergence,
}

pub type Result<T> = std::result::Result<T, Error>;
