use thiserror::Error;

/// Failure classes of the command line, one per exit code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    /// A checked property failed; the message carries the counterexample.
    #[error("property violated: {0}")]
    Violation(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Violation(_) => 1,
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl From<dichro_core::Error> for CliError {
    fn from(e: dichro_core::Error) -> Self {
        match e {
            dichro_core::Error::LimitExceeded { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}
