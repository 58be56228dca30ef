use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("invalid Coxeter type: {0}")]
    InvalidType(String),
    #[error("elements belong to different Coxeter systems ({0} and {1})")]
    MixedSystems(String, String),
    #[error("group order {order} exceeds the enumeration budget {budget}")]
    BudgetExceeded { order: u64, budget: u64 },
    #[error("block ({offset}, {size}) does not fit in degree {degree}")]
    RangeOverflow { offset: usize, size: usize, degree: usize },
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    #[error("signed permutation has an odd number of sign changes; not in type D")]
    ParityViolation,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not a minimal double coset representative")]
    NotDoubleCosetRep(String),
    #[error("centralizer index is {0}, expected 2")]
    IndexNotTwo(u64),
    #[error("double partition {0} is non-compliant; no centralizing complement exists")]
    NonCompliant(String),
    #[error("operation not supported: {0}")]
    Unsupported(String),
    #[error("truncation order {order} is below the matrix size {n}")]
    TruncationTooLow { order: usize, n: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = CoxeterError> = std::result::Result<T, E>;
