use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("unsupported dimension {0} (expected 1..=8)")]
    UnsupportedDimension(usize),

    #[error("degree {degree} out of range for {context}")]
    DegreeOutOfRange { degree: usize, context: &'static str },

    #[error("expected a {expected}, got {found}")]
    WrongSignature { expected: String, found: String },

    #[error("index {index} is not a basis index in dimension {dim}")]
    BadIndex { index: usize, dim: usize },

    #[error("repeated index {0} in blade")]
    RepeatedIndex(usize),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("ambiguous dimension: {0}")]
    AmbiguousDimension(String),

    #[error("Gram matrix is degenerate")]
    DegenerateGram,

    #[error("shape mismatch: {0}")]
    Shape(String),
}

pub type Result<T> = std::result::Result<T, Error>;
