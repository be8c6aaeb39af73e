use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    ZeroDivision,
    #[error("square root of a negative rational")]
    NegativeRadicand,
    #[error("radicand does not fit the supported range")]
    RadicandOverflow,
    #[error("bar placed on diagonal box ({0}, {0})")]
    BarOnDiagonal(usize),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("tableau shapes differ")]
    ShapeMismatch,
    #[error("pole at evaluation point")]
    PoleAtEvaluation,
    #[error("pole at evaluation point does not cancel")]
    NonRemovablePole,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal error: {0}")]
    Internal(String),
}
