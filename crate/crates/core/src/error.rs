use thiserror::Error;

/// Errors surfaced by the engine. `Internal` marks invariant violations
/// (a theorem the engine relies on failed to hold on concrete data), which
/// the CLI maps to a distinct exit code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    VarMismatch(usize, usize),
    #[error("prime {0} too large: moduli must be < 2^31")]
    PrimeTooLarge(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("colon by the zero polynomial")]
    ColonByZero,
    #[error("division by zero")]
    DivisionByZero,
    #[error("partition ({0}) does not fit in ambient dimension r = {1}")]
    PartitionTooLarge(usize, usize),
    #[error("empty partition")]
    EmptyPartition,
    #[error("signature windows are disjoint")]
    DisjointWindows,
    #[error("incompatible signatures: {0}")]
    IncompatibleSignatures(String),
    #[error("family is not flat over k[t]: {0}")]
    NotFlat(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal invariant violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
