use thiserror::Error;

/// Errors raised by the analysis routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix must have at least one row")]
    Empty,

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is numerically singular")]
    SingularMatrix,

    #[error("matrix is not symmetric within tolerance")]
    NotSymmetric,

    #[error("dimension {n} exceeds the exhaustive enumeration limit {limit}")]
    DimensionTooLarge { n: usize, limit: usize },

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("norm {norm} is not supported by {theorem}")]
    UnsupportedNormForTheorem {
        norm: &'static str,
        theorem: &'static str,
    },

    #[error("eigenvalue iteration did not converge")]
    NoConvergence,

    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
