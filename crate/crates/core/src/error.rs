use thiserror::Error;

/// Errors raised when an operation is called outside its domain or a
/// construction cannot be completed.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field order {p}^{k} exceeds the supported cap of 2^20")]
    FieldTooLarge { p: u32, k: u32 },
    #[error("modulus is not a monic irreducible polynomial of degree {degree}")]
    ReducibleModulus { degree: u32 },
    #[error("element {0} is outside the field")]
    NotAnElement(u32),
    #[error("direction must be nonzero")]
    ZeroDirection,
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("verification failed: {0}")]
    Verification(#[from] crate::report::Violation),
    #[error("budget exhausted: requested {requested}, achieved {achieved}")]
    BudgetUnreachable { requested: usize, achieved: usize },
    #[error("search failed after {steps} steps: {covered} of {total} subsets covered")]
    SearchFailed {
        steps: u64,
        covered: u64,
        total: u64,
    },
    #[error("{0}")]
    Missing(String),
}

pub type Result<T> = std::result::Result<T, Error>;
