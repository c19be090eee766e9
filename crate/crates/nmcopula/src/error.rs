//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CopulaError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("family has no absolutely continuous density")]
    NoDensity,

    #[error("root search did not converge within {max_iter} iterations (residual {residual:e})")]
    ConvergenceFailure { max_iter: usize, residual: f64 },

    #[error("argument outside domain: {0}")]
    Domain(String),

    #[error("non-finite value at row {row}, column {col}")]
    NonFiniteInput { row: usize, col: usize },

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("fewer than two rows remain after quantile trimming")]
    EmptyAfterTrim,

    #[error("pseudolog-likelihood is not finite anywhere on the search interval")]
    NonFiniteLikelihood,

    #[error("leave-one-out fold {fold} failed: {source}")]
    FoldFailure {
        fold: usize,
        #[source]
        source: Box<CopulaError>,
    },
}

pub type Result<T> = std::result::Result<T, CopulaError>;
