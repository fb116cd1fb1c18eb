use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("malformed Maya diagram: {0}")]
    MalformedMaya(String),
    #[error("weight mismatch: {0}")]
    WeightMismatch(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("invalid cylindric shape: {0}")]
    InvalidShape(String),
    #[error("numerically ill-posed input: {0}")]
    Numeric(String),
    #[error("internal arithmetic invariant violated: {0}")]
    Arithmetic(String),
}

pub type Result<T> = std::result::Result<T, Error>;
