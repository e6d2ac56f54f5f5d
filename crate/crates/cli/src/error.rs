use scramble_core::Error as CoreError;

/// Failure of a CLI command, mapped onto the process exit code.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("assertion violated: {0}")]
    Assertion(String),
    #[error("numerical error: {0}")]
    Numerical(String),
    #[error("I/O error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Assertion(_) | CliError::Numerical(_) => 3,
            CliError::Io(_) => 1,
        }
    }

    /// Config error tagged with the offending field.
    pub fn field(field: &str, msg: impl std::fmt::Display) -> Self {
        CliError::Config(format!("field `{field}`: {msg}"))
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::InvalidConfig(_)
            | CoreError::InvalidPartition(_)
            | CoreError::MalformedGate { .. }
            | CoreError::EnumerationBudget { .. }
            | CoreError::Parse(_) => CliError::Config(e.to_string()),
            other => CliError::Numerical(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
