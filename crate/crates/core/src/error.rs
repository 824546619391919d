use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Invalid or unsupported geometry (self-intersection, cusp, misplaced points).
    #[error("geometry error: {0}")]
    Geometry(String),

    #[error("convergence error: {0}")]
    Convergence(String),

    #[error("solver error: {0}")]
    Solver(String),

    /// The a-posteriori error estimate exceeds the acceptable fraction of the value.
    #[error("under-resolved at n = {n}: value {value}, error estimate {error_estimate}; increase n")]
    UnderResolved { value: f64, error_estimate: f64, n: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn geometry(msg: impl Into<String>) -> Error {
    Error::Geometry(msg.into())
}
