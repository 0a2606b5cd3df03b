//! Engine-wide error type.

use thiserror::Error;

/// Errors produced by the pricing engine.
///
/// Variants carry enough context to locate the failing node or argument;
/// callers that march over grids attach their own (time, frequency) indices.
#[derive(Debug, Clone, Error)]
pub enum EngineError {
    /// Argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation at a pole of a special function.
    #[error("pole error: {0}")]
    Pole(String),

    /// An iterative computation did not converge within its budget.
    #[error("convergence error: {what} (best estimate {estimate:e}, error bound {bound:e})")]
    Convergence {
        what: String,
        estimate: f64,
        bound: f64,
    },

    /// A value fell outside a configured truncation or lattice range.
    #[error("range error: {0}")]
    Range(String),

    /// Mismatched grid shapes between cooperating structures.
    #[error("shape error: {0}")]
    Shape(String),

    /// Root finder failed at a boundary node.
    #[error("node error at t={t}: {what} (residual trace: {residuals:?})")]
    Node {
        t: f64,
        what: String,
        residuals: Vec<f64>,
    },

    /// A bracketing search found no sign change.
    #[error("no-root error: {what} (scanned residuals: {residuals:?})")]
    NoRoot { what: String, residuals: Vec<f64> },

    /// A required moment (e.g. a Levy tail integral) diverges.
    #[error("moment error: {0}")]
    Moment(String),

    /// Numerical quadrature failed to reach its tolerance.
    #[error("integration error: {0}")]
    Integration(String),

    /// A linear solve hit a singular or near-singular system.
    #[error("linear-solve error: {what} (condition estimate {condition:e})")]
    LinearSolve { what: String, condition: f64 },

    /// A boundary does not cover the requested pricing interval.
    #[error("coverage error: {0}")]
    Coverage(String),

    /// Model or configuration parameters violate an invariant.
    #[error("validation error: {0}")]
    Validation(String),

    /// Characteristic-function evaluation failed.
    #[error("cf evaluation error at (u={u}, omega={omega}): {source}")]
    CfEvaluation {
        u: f64,
        omega: f64,
        #[source]
        source: Box<EngineError>,
    },

    /// Transition density is degenerate (zero variance).
    #[error("degenerate-density error: {0}")]
    DegenerateDensity(String),
}

impl EngineError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        EngineError::Domain(msg.into())
    }

    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        EngineError::Validation(msg.into())
    }

    /// Wraps an error with the (u, omega) evaluation context.
    pub fn in_cf_context(self, u: f64, omega: f64) -> Self {
        EngineError::CfEvaluation {
            u,
            omega,
            source: Box::new(self),
        }
    }
}
