use thiserror::Error;

/// Errors reported by the constructions and parsers in this crate.
///
/// Usage errors from the command line are handled separately by `clap`;
/// everything here is a domain error (exit code 1 in the CLI).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid word literal: {0}")]
    InvalidWord(String),

    #[error("operation requires a non-empty word")]
    EmptyWord,

    #[error("invalid search parameters: {0}")]
    InvalidParams(String),

    #[error("promise violated at level {level}, group {group}: {zeros} zeros where {m} or {m_plus_one} expected", m_plus_one = .m + 1)]
    PromiseViolation {
        level: usize,
        group: usize,
        zeros: usize,
        m: usize,
    },

    #[error("grid format error: {0}")]
    GridFormat(String),

    #[error("grid dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("coordinate out of bounds: {0}")]
    OutOfBounds(String),

    #[error("instance does not fit: {0}")]
    Capacity(String),

    #[error("invalid CSV input: {0}")]
    Csv(String),
}

pub type Result<T> = std::result::Result<T, Error>;
