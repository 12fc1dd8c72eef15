use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A size or index argument is out of the accepted range.
    #[error("range error: {0}")]
    Range(String),

    /// A structured value (matrix, boundary pair, series) violates its invariants.
    #[error("validation error: {0}")]
    Validation(String),

    /// Enumeration would produce more items than the caller allowed.
    #[error("capacity exceeded: {count} items, cap is {cap}")]
    Capacity { count: String, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
