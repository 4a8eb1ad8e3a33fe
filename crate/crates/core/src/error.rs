use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("element is a zero divisor (norm form vanishes) and has no inverse")]
    NotInvertible,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ring mismatch: expected {expected}, found {found}")]
    RingMismatch { expected: String, found: String },
    #[error("diagonal scalar {0} must be real")]
    NonRealDiagonal(&'static str),
    #[error("theorem hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("no instance found within {0} trials")]
    SearchExhausted(usize),
    #[error("kappa must be 1, 2 or 3 (got {0})")]
    InvalidKappa(i64),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("n = {n} exceeds the cap {cap} (HYPERPLITZ_MAX_N)")]
    SizeCap { n: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
