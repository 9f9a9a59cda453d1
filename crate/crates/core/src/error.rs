use thiserror::Error;

/// Errors raised while building or checking finite structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is not a group: addition not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("table is not a group: 0 is not a two-sided identity (fails at {a})")]
    NoIdentityAtZero { a: usize },
    #[error("table is not a group: element {a} has no inverse")]
    NoInverse { a: usize },
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("entry {value} out of range for order {order}")]
    EntryOutOfRange { value: usize, order: usize },
    #[error("unsupported order {0}")]
    UnsupportedOrder(usize),
    #[error("search budget of {budget} assignments exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("defining identity a + a·b = a∘b fails at ({a}, {b})")]
    DefiningIdentityFails { a: usize, b: usize },
    #[error("operation is not a left skew ring")]
    NotSkewRing,
    #[error("operation is not a left weak ring")]
    NotWeakRing,
    #[error("map is not an idempotent group endomorphism")]
    NotIdempotent,
    #[error("operation {index} is not pointed: p(0, ..., 0) != 0")]
    NotPointed { index: usize },
    #[error("operation {index} has arity {arity}, above the supported bound")]
    ArityTooLarge { index: usize, arity: usize },
    #[error("congruence/ideal correspondence broken: {0}")]
    BijectionFailure(String),
    #[error("cannot access {path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
