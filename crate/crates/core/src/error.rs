use thiserror::Error;

/// Errors raised by the algebra kernels.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("leading term of the zero polynomial")]
    ZeroPolynomial,
    #[error("coefficient domain is not a field: {0}")]
    NotAField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("negative rank r_{level} = {value}")]
    NegativeRank { level: usize, value: i64 },
    #[error("complex not of the claimed rank format: {0}")]
    RankFormat(String),
    #[error("cardinality constraint violated: {0}")]
    Cardinality(String),
    #[error("grid too small: {0}")]
    GridTooSmall(String),
    #[error("enumeration cap of {0} exceeded")]
    CapExceeded(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
