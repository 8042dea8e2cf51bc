use thiserror::Error;

/// Errors produced by the numerical-range library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    Dimension { left: usize, right: usize },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("vector is not unit length (norm {norm})")]
    Normalization { norm: f64 },

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal {off:e})")]
    Convergence { sweeps: usize, off: f64 },

    #[error("operator is a complex multiple of a self-adjoint operator")]
    DegenerateOperator,

    #[error("half-plane clipping produced an empty region")]
    EmptyIntersection,

    #[error("slabs do not bound a region: {0}")]
    InvalidSlabs(String),

    #[error("zero operator: bound ratios are undefined")]
    ZeroOperator,

    #[error("parse error in `{field}`: {message}")]
    Parse { field: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
