use thiserror::Error;

/// Errors raised by the exact-arithmetic substrate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CoreError {
    #[error("matrix is not unimodular (|det| = 1 required), det = {0}")]
    NonUnimodular(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("the zero polynomial has no roots to isolate")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different number fields")]
    MixedFields,
    #[error("no root of {poly} in ({lo}, {hi})")]
    NoRootInInterval {
        poly: String,
        lo: String,
        hi: String,
    },
    #[error("interval ({lo}, {hi}) isolates {count} roots of {poly}, expected exactly one")]
    AmbiguousInterval {
        poly: String,
        lo: String,
        hi: String,
        count: usize,
    },
    #[error("parse error: {0}")]
    Parse(String),
}
