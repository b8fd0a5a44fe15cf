use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("extension degree {0} out of range (supported: 1..=24)")]
    DegreeOutOfRange(u32),
    #[error("modulus {modulus:#x} does not have degree {m}")]
    ModulusDegree { modulus: u32, m: u32 },
    #[error("modulus {0:#x} is reducible over GF(2)")]
    ReducibleModulus(u32),
    #[error("element {value:#x} does not belong to GF(2^{m})")]
    ElementOutOfRange { value: u32, m: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("basis is invalid: {0}")]
    InvalidBasis(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("generator matrix has rank {rank} but {rows} rows")]
    RankDeficient { rank: usize, rows: usize },
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("no verified self-orthogonal code found: {0}")]
    SearchExhausted(String),
    #[error("formula defect: {0}")]
    FormulaDefect(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
