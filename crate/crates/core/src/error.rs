use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative value")]
    NegativeRadicand,
    #[error("{0} must be strictly positive")]
    NotPositive(&'static str),
    #[error("polynomial has no sign change on the bracket")]
    NoSignChange,
    #[error("degenerate (collinear) triangle")]
    DegenerateTriangle,
    #[error("unsupported composition: {0}")]
    UnsupportedComposition(String),
    #[error("upper bound {0} is not below sqrt(2): relative-size ordering would break")]
    BoundTooLarge(String),
    #[error("upper bound {0} must exceed 1")]
    BoundTooSmall(String),
    #[error("insufficient quantity of {0}")]
    InsufficientQuantity(String),
    #[error("rule {index} is not a valid reaction")]
    InvalidRule { index: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}
