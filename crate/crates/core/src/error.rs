use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero integer")]
    InvalidDivisor,

    #[error("{value} is not divisible by {divisor} in {ring}")]
    NotDivisible { ring: String, value: String, divisor: i64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{function} requires a commutative ring, got {ring}")]
    NotCommutative { function: &'static str, ring: String },

    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("unknown method `{0}`")]
    UnknownMethod(String),

    #[error("methods disagree: {0}")]
    Disagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
