use thiserror::Error;

/// Failures of gross-number arithmetic and ordering.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrossError {
    #[error("unsupported sum: {0}")]
    UnsupportedSum(String),
    #[error("unsupported product: {0}")]
    UnsupportedProduct(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("non-exact division: {0}")]
    NonExactDivision(String),
    #[error("negative exponent in a count")]
    NegativeExponent,
    #[error("unsupported exponent: {0}")]
    UnsupportedExponent(String),
    #[error("comparison undetermined: {0}")]
    Undetermined(String),
    #[error("exponent nesting deeper than {0}")]
    DepthExceeded(usize),
    #[error("{0} is not infinite")]
    NotInfinite(String),
    #[error("{0} is not an integer-valued infinite number")]
    NotInteger(String),
    #[error("size cap exceeded: {0}")]
    CapExceeded(String),
}

pub type Result<T> = std::result::Result<T, GrossError>;
