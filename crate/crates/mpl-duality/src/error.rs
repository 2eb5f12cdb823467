use thiserror::Error;

/// Errors shared across the symbolic and numerical layers.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("index is not admissible: {0}")]
    NotAdmissible(String),
    #[error("word is not index-parseable: {0}")]
    NotParseable(String),
    #[error("polynomial is not in the admissible subspace A0")]
    NotInA0,
    #[error("series diverges for the given arguments: {0}")]
    DivergentSeries(String),
    #[error("did not reach target tolerance within max_terms (residual estimate {estimate})")]
    NoConvergence { estimate: String },
    #[error("invalid index for this operation: {0}")]
    InvalidIndex(String),
    #[error("transport of y1 requires a non-empty right word")]
    EmptyRightSide,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
