use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unsupported algebra dimension {0} (expected 2, 4 or 8)")]
    UnsupportedDimension(usize),

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("inverse of zero")]
    InverseOfZero,

    #[error("singular point: {0}")]
    Singular(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("expected a polynomial (denominator power must be 0)")]
    NotPolynomial,

    #[error("unsupported kernel order: {0}")]
    UnsupportedOrder(String),

    #[error("point is not on the boundary (height {0:e})")]
    NotOnBoundary(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("integrand is not absolutely integrable: {0}")]
    NonIntegrable(String),

    #[error("quadrature did not converge: best value {best:e}, error estimate {error:e}")]
    NonConvergence { best: f64, error: f64 },

    #[error("evaluation budget {budget} exhausted: best value {best:e}, error estimate {error:e}")]
    BudgetExhausted { budget: u64, best: f64, error: f64 },

    #[error("invalid sample weight: {0}")]
    InvalidWeight(String),
}
