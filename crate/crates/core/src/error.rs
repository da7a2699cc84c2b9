use thiserror::Error;

/// Errors surfaced by the exact kernel and the algebra layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("algebra tag mismatch: expected {expected}, got {got}")]
    TagMismatch { expected: String, got: String },

    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),

    #[error("unknown class `{0}`")]
    UnknownClass(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
