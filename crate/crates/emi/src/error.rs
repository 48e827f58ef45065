use thiserror::Error;

/// Failures surfaced by the command-line layer, each with a stable exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    Precision(String),

    #[error("{0}")]
    Verification(String),

    #[error("{0}")]
    Internal(String),
}

impl CliError {
    /// 1 verification failure, 2 usage error, 3 precision error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) | CliError::Internal(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Precision(_) => 3,
        }
    }
}

impl From<emi_core::Error> for CliError {
    fn from(e: emi_core::Error) -> Self {
        use emi_core::Error as E;
        let msg = e.to_string();
        match e {
            E::PrecisionTooLow { .. } | E::PrecisionExceeded { .. } | E::InsufficientPrecision { .. } => {
                CliError::Precision(msg)
            }
            E::UnknownIntegrand(_)
            | E::ExactModeUnsupported(_)
            | E::UnsupportedOrder(_)
            | E::NoSubintervals
            | E::EmptyScan
            | E::Parse(_) => CliError::Usage(msg),
            E::DivisionByZero | E::PoleAtCenter | E::JetMismatch => CliError::Internal(msg),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
