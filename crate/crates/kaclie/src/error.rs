use thiserror::Error;

/// Errors raised by every fallible operation in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A Lie type outside the supported range (e.g. `E9`, `B1`).
    #[error("invalid type {series}{rank}: {reason}")]
    InvalidType { series: char, rank: usize, reason: &'static str },
    /// Arguments are well-formed but mathematically illegal.
    #[error("domain error: {0}")]
    Domain(String),
    /// A claimed certificate or structure failed re-checking.
    #[error("validation failed: {0}")]
    Validation(String),
    /// An internal invariant did not hold; indicates a bug.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn internal<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Internal(msg.into()))
}
