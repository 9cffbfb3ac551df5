use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands live in different rings, or a monomial does not fit its ring.
    #[error("structural error: {0}")]
    Structural(String),

    /// The operation is undefined for its input (colon by the zero ideal, top degree of a
    /// module that is not Artinian, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed spec file or monomial text.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// The presented ideal violates the standing hypothesis (I nonzero, proper, Iⁿ ≠ 0).
    #[error("standing hypothesis violated: {0}")]
    Hypothesis(String),

    /// Invalid parameters (family constraints, empty ranges, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// No closed-form prediction is known for the requested (family, function) pair.
    #[error("no closed form for {family}/{function}")]
    NoClosedForm { family: String, function: String },

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}
