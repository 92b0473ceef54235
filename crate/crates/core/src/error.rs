use thiserror::Error;

/// Errors produced by row construction and the operations on rows.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("row must contain at least one entry")]
    EmptyRow,

    #[error("entry {0} is not a sign; every entry must be +1 or -1")]
    InvalidEntry(i64),

    #[error("row lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("row length {0} is odd; this operation needs an even length")]
    OddLength(usize),

    #[error("index {index} is outside the valid range {min}..={max}")]
    IndexOutOfRange { index: usize, min: usize, max: usize },

    #[error("cannot parse row literal: {0}")]
    Parse(String),
    #[error("invalid search configuration: {0}")]
    Config(String),
}
