use thiserror::Error;

/// Errors raised by the algebra, matroid and serialization layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operand {0} does not belong to the {1} blueprint")]
    InstanceMismatch(String, String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("field order {0} is not a supported prime (need a prime p <= 13)")]
    NonPrime(u32),
    #[error("relation shape not decided by the {0} preset: {1}")]
    UnsupportedRelation(String, String),
    #[error("operation requires a {expected} preset, got {got}")]
    WrongPresetKind { expected: &'static str, got: String },
    #[error("index {index} out of range for dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("malformed index set: {0}")]
    MalformedIndexSet(String),
    #[error("element is not homogeneous of a single grade")]
    NotHomogeneous,
    #[error("element is not in H_(d,n): {0}")]
    NotInH(String),
    #[error("no value of the function is a unit")]
    NoUnit,
    #[error("enumeration size {size} exceeds cap {cap}")]
    CapExceeded { size: u128, cap: u128 },
    #[error("matrix has rank below {0}")]
    RankDeficient(usize),
    #[error("size violation: {0}")]
    SizeViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
