use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] zetavals_core::Error),
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("verification failed: {0}")]
    Failed(String),
}

/// The machine-readable form printed on failure.
#[derive(Debug, Serialize)]
pub struct ErrorObject {
    pub kind: &'static str,
    pub message: String,
    pub exit_code: i32,
}

impl CliError {
    /// 1 for a failed verification, 2 for usage and domain errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed(_) => 1,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        use zetavals_core::Error as E;
        match self {
            CliError::Core(E::Pole(_)) => "pole",
            CliError::Core(E::NoClosedForm { .. }) => "no_closed_form",
            CliError::Core(E::InvalidArgument(_)) => "invalid_argument",
            CliError::Core(E::DivisionByZero) => "division_by_zero",
            CliError::Core(E::NonFinite(_)) => "non_finite",
            CliError::Core(E::Bracket { .. }) => "bracket",
            CliError::Usage(_) => "usage",
            CliError::Io(_) => "io",
            CliError::Failed(_) => "verification_failed",
        }
    }

    pub fn to_object(&self) -> ErrorObject {
        ErrorObject {
            kind: self.kind(),
            message: self.to_string(),
            exit_code: self.exit_code(),
        }
    }
}
