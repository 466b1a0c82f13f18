use thiserror::Error;

/// Errors raised by the symbolic and numerical layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("generator {generator} has order {order}, beyond the truncation order {max}")]
    Truncation {
        generator: String,
        order: usize,
        max: usize,
    },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("form is not homogeneous")]
    MixedDegree,
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("singular jet: first derivative vanishes")]
    SingularJet,
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown identifier `{name}` at byte {pos}")]
    UnknownIdentifier { pos: usize, name: String },
    #[error("invalid diffeomorphism: {0}")]
    InvalidDiffeo(String),
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),
    #[error("request too large: {0}")]
    TooLarge(String),
    #[error("invalid job: {0}")]
    Job(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
