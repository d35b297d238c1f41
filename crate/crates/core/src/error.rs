//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(usize),
    #[error("invalid dot pattern: {0}")]
    InvalidPattern(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("corrupt simulation state: {0}")]
    Corrupt(String),
    #[error("duplicate shape name: {0}")]
    DuplicateName(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
