use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by evaluators, integrators and class checks.
///
/// A refuted class membership is not an error; it is reported through
/// [`crate::report::Verdict::Refuted`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no convergence: value {value} with error estimate {error}")]
    NonConvergence { value: f64, error: f64 },
    #[error("divisor series has zero constant term")]
    DegenerateDivisor,
    #[error("differentiation step underflow at x = {0}")]
    StepUnderflow(f64),
    #[error("need at least {needed} samples with strictly decreasing h, got {got}")]
    InsufficientSamples { needed: usize, got: usize },
    #[error("argument {0} lies on the branch cut (-inf, 0]")]
    Cut(Complex64),
    #[error("pole at {0}")]
    Pole(f64),
    #[error("order {order} exceeds the table limit {max}")]
    OrderOverflow { order: usize, max: usize },
    #[error("cancellation: {0}")]
    Cancellation(String),
    #[error("extrapolation did not stabilize: {0}")]
    Extrapolation(String),
    #[error("density evaluated at singular point {0}")]
    SingularPoint(f64),
    #[error("points {0} and {1} coincide")]
    DegeneratePoints(f64, f64),
    #[error("no sign change in bracket ({0}, {1})")]
    Bracket(f64, f64),
    #[error("iterate left the closed upper half-plane at {0}")]
    DomainEscape(Complex64),
    #[error("function is not positive at x = {0}")]
    NonPositive(f64),
    #[error("evaluation failed at {0}")]
    Evaluation(Complex64),
    #[error("two evaluation routes disagree: {a} vs {b}")]
    Disagreement { a: f64, b: f64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
