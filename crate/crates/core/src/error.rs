use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("path ideal parameters require 1 <= m <= n, got n={n}, m={m}")]
    InvalidPathParams { n: usize, m: usize },

    #[error("variable {var} outside 1..={ambient}")]
    VarOutOfRange { var: usize, ambient: usize },

    #[error("ambient dimension {ambient} exceeds the configured cap {cap}")]
    AmbientTooLarge { ambient: usize, cap: usize },

    #[error("operation undefined for the unit ideal")]
    UnitIdeal,

    #[error("subset {0} is not a member of the poset")]
    NotInPoset(String),

    #[error("poset is empty")]
    EmptyPoset,

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("witness rejected at n={n}, m={m}: {reason}")]
    WitnessRejected { n: usize, m: usize, reason: String },

    #[error("no colon recursion is defined for n={n}, m={m}")]
    NoRecursion { n: usize, m: usize },

    #[error("time budget exhausted")]
    BudgetExhausted,
}
