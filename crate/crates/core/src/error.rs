//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Broad classes used by the command line front end to pick an exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed input or invalid arguments.
    Usage,
    /// A mathematical precondition of an operation does not hold.
    Precondition,
    /// An exhaustive computation would exceed its enumeration budget.
    Budget,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} is not irreducible over its base field")]
    ReducibleModulus(String),
    #[error("modulus must be monic of degree {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("field of order {0} exceeds the supported size")]
    FieldTooLarge(u64),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("zero has no multiplicative order")]
    ZeroOrder,
    #[error("level mismatch: expected {expected}, got {got}")]
    LevelMismatch { expected: String, got: String },
    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },
    #[error("element code {0} does not belong to the field")]
    InvalidElement(u32),
    #[error("division by the zero polynomial")]
    ZeroPolynomial,
    #[error("irreducibility is undefined for constant polynomials")]
    ConstantPolynomial,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("the zero code has no nonzero codeword")]
    ZeroCode,
    #[error("exhaustive enumeration of {0} codewords exceeds the cap")]
    DimensionCap(String),
    #[error("scaling vector has a zero coordinate at position {0}")]
    ZeroScaling(usize),
    #[error("invalid form: {0}")]
    InvalidForm(String),
    #[error("dimension hypothesis violated: dim C + dim D = {sum}, expected {expected}")]
    DimensionHypothesis { sum: usize, expected: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no admissible {0} exists in the searched range")]
    Exhausted(String),
    #[error("gcd({a}, {b}) != 1")]
    NotCoprime { a: u64, b: u64 },
    #[error("code is not {0}-constacyclic")]
    NotConstacyclic(String),
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::BudgetExceeded(_) | Error::DimensionCap(_) => ErrorClass::Budget,
            Error::Parse { .. }
            | Error::Io(_)
            | Error::NotPrime(_)
            | Error::ReducibleModulus(_)
            | Error::DegreeMismatch { .. }
            | Error::FieldTooLarge(_)
            | Error::InvalidElement(_)
            | Error::InvalidForm(_)
            | Error::ShapeMismatch(_)
            | Error::LevelMismatch { .. }
            | Error::OutOfRange { .. } => ErrorClass::Usage,
            _ => ErrorClass::Precondition,
        }
    }

    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::ShapeMismatch(msg.into())
    }
}
