use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not Hermitian (max |A - A^dagger| = {0:.3e})")]
    NotHermitian(f64),

    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    #[error("state is not pure (tr rho^2 = {0:.12})")]
    NotPure(f64),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("Pauli enumeration needs {needed} terms, budget is {budget}; use Monte-Carlo averaging instead")]
    EnumerationBudget { needed: u64, budget: u64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("gate {index}: {reason}")]
    MalformedGate { index: usize, reason: String },

    #[error("marginal of subsystem {subsystem} is rank deficient (min eigenvalue {min_eigenvalue:.3e}); regularize the state first")]
    RankDeficient { subsystem: char, min_eigenvalue: f64 },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("non-finite value encountered: {0}")]
    NonFinite(String),

    #[error("circuit file: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
