use thiserror::Error;

/// Errors raised by the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at u = {point}")]
    Pole { point: String },
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("integer overflow in exact evaluation")]
    Overflow,
}

/// Errors raised by the algebraic constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CapelliError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T, E = CapelliError> = std::result::Result<T, E>;
