use thiserror::Error;

/// Errors raised by the combinatorial layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("rank must be at least 2, got {0}")]
    InvalidRank(usize),

    #[error("horizon must be a positive integer")]
    InvalidHorizon,

    #[error("weight k={k} outside the valid range [1, {max}]")]
    InvalidWeight { k: u32, max: u32 },

    #[error("point is not in the Weyl chamber (coordinates not weakly decreasing)")]
    NotInWeylChamber,

    #[error("vertex {0} is not a member of the complex at the given (d, k)")]
    NotMember(String),

    #[error("critical index is undefined: {0} is not a member at the given (d, k)")]
    UndefinedCriticalIndex(String),

    #[error("index {j} outside the valid range [1, {max}]")]
    InvalidIndex { j: usize, max: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not a simplex chain: {0}")]
    InvalidChain(String),

    #[error("rendering is only supported for rank 3, got rank {0}")]
    UnsupportedRank(usize),

    #[error("boundarylessness may fail on the chamber walls; rerun Weyl-chamber windows in report-only mode")]
    WeylBoundaryRefused,

    #[error("unsupported document schema {found:?}, expected {expected:?}")]
    SchemaMismatch { expected: String, found: String },

    #[error("document is invalid: {0}")]
    MalformedDocument(String),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("reduction did not terminate within {0} steps")]
    ReductionStuck(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
