use thiserror::Error;

use crate::weights::HalfInt;

/// A violated signature or label constraint.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("expected {expected} labels, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("labels must satisfy |x_1| < x_2 < ... (even p+q), got {0}")]
    EvenOrdering(String),
    #[error("labels must satisfy 0 < x_1 < x_2 < ... (odd p+q), got {0}")]
    OddOrdering(String),
    #[error("labels and c must all be integral or all half-odd-integral, got {0}")]
    MixedCongruence(String),
    #[error(
        "reduced-pair tail must satisfy 1/2 < n_3 < ... with half-odd-integral entries, got {0}"
    )]
    ReducedTail(String),
    #[error("eps must be +1 or -1, got {0}")]
    Eps(i64),
    #[error("label bound must be non-negative, got {0}")]
    NegativeBound(HalfInt),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p+q > 4 required, got p+q = {0}")]
    Domain(u32),
    #[error("p >= q required, got p = {p}, q = {q}")]
    Order { p: u32, q: u32 },
    #[error("invalid signature: {0}")]
    Validation(#[from] ValidationError),
    #[error("vector {0} is not dominant for the compact part")]
    Dominance(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("limit exceeded: {0}")]
    Limit(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("first-order arrow {0} matches no catalog row")]
    Unclassified(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
