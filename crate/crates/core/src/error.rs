use thiserror::Error;

/// Errors raised by the analytic and verification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid moduli: {0}")]
    InvalidModuli(String),

    #[error("domain violation: {0}")]
    Domain(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
