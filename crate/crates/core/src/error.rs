use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("ring mismatch")]
    RingMismatch,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("degree arithmetic overflow")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degree pattern violation: {0}")]
    DegreePattern(String),
}

pub type Result<T> = std::result::Result<T, Error>;
