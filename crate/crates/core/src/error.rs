//! Error type shared by every module of the crate.

use thiserror::Error;

/// Failure modes of the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument outside the supported domain: {0}")]
    Domain(String),
    #[error("pole of the Gamma function or series at argument {arg}")]
    Pole { arg: f64 },
    #[error("series did not converge within {terms} terms")]
    NonConvergence { terms: usize },
    #[error("floating-point overflow: {0}")]
    Overflow(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid multi-index: {0}")]
    InvalidIndex(String),
    #[error("frequency grids do not match")]
    GridMismatch,
    #[error("missing entry: {0}")]
    Missing(String),
    #[error("input vectors are linearly dependent")]
    RankDeficient,
    #[error("mode vector does not describe a real field")]
    NotReal,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for poles and overflows, the errors that signal a numerical
    /// singularity rather than bad input.
    pub fn is_numeric_singularity(&self) -> bool {
        matches!(self, Error::Pole { .. } | Error::Overflow(_))
    }
}
