//! Crate-wide error type.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A parser rejected its input (algebra files, identity files, scalar
    /// literals, bilinear-form literals, family files).
    #[error("parse error: {0}")]
    Parse(String),

    /// An operation received structurally incompatible arguments
    /// (dimension mismatches, wrong arity, unknown basis index).
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// Division by an identically-zero scalar or polynomial.
    #[error("division by zero")]
    DivisionByZero,

    /// An identity that was required to hold failed; carries a witness.
    #[error("identity violated: {0}")]
    IdentityViolated(String),

    /// A verification step found a nonzero residual.
    #[error("verification failed: {0}")]
    VerificationFailed(String),

    /// A Gröbner basis computation exceeded its configured budget.
    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),

    /// Underlying I/O failure when reading fixture or input files.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// JSON serialization failure (should not occur for crate-built values).
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Shorthand constructor for parse errors.
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    /// Shorthand constructor for shape errors.
    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }
}
