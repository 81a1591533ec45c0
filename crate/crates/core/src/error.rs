//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by instance construction, solvers and oracles.
#[derive(Debug, Error)]
pub enum Error {
    /// Sizes of related inputs disagree (e.g. partition vs. game).
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A parameter is outside its admissible range.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// An exact enumeration was requested above its budget.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// The operation does not support the game's mode or model kind.
    #[error("unsupported mode: {0}")]
    Mode(String),

    /// Two inputs that must describe the same object do not.
    #[error("inconsistent inputs: {0}")]
    Consistency(String),

    /// A file or string could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
