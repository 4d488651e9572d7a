use thiserror::Error;

/// Errors raised by the algebraic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("enumeration budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("parity precondition violated: {0}")]
    Parity(String),
    #[error("congruence precondition violated: {0}")]
    Congruence(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("truncation margin exhausted: {0}")]
    Truncation(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("group too large: {0} elements")]
    GroupTooLarge(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
