use thiserror::Error;

/// Errors raised by field construction, code sampling and the verification tooling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("parameters too large: {0}")]
    ParameterTooLarge(String),
    #[error("division by zero")]
    DivideByZero,
    #[error("element does not belong to this field")]
    FieldMismatch,
    #[error("input elements do not form a basis (rank {rank} < {n})")]
    NotABasis { rank: usize, n: usize },
    #[error("polynomial degree {degree} exceeds the limit {limit}")]
    DegreeTooLarge { degree: usize, limit: usize },
    #[error("requested {requested} distinct elements but the field only has {available}")]
    TooManyRequested { requested: u128, available: u128 },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("randomness tape exhausted after {consumed} bits")]
    TapeExhausted { consumed: u64 },
    #[error("bad dimensions: {0}")]
    BadDimensions(String),
    #[error("linearized polynomial has zero constant coefficient")]
    ZeroConstantTerm,
    #[error("kernel of the linearized polynomial meets V (dim f(V) = {dim} < k = {k})")]
    KernelIntersectsV { dim: usize, k: usize },
    #[error("enumeration budget exceeded: need {needed}, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("argument outside the domain: {0}")]
    DomainError(String),
    #[error("input list at position {position} has {size} symbols, more than lambda = {lambda}")]
    BadListSize { position: usize, size: usize, lambda: usize },
    #[error("matrix has rank {rank}, expected full column rank {b}")]
    NotFullRank { rank: usize, b: usize },
    #[error("tape space of {size} outcomes exceeds the exhaustive limit {limit}")]
    TapeSpaceTooLarge { size: u128, limit: u128 },
    #[error("type has dimension {dim}, expected full rank {b}")]
    NotFullRankTau { dim: usize, b: usize },
    #[error("type arity {b} exceeds the locality {ell} of the ensemble")]
    ArityExceedsLocality { b: usize, ell: usize },
    #[error("unknown ensemble {0:?}")]
    UnknownEnsemble(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Errors caused by running out of an enumeration or randomness budget.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::ParameterTooLarge(_)
                | Error::TapeExhausted { .. }
                | Error::BudgetExceeded { .. }
                | Error::TapeSpaceTooLarge { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
