use dnum_core::Error as CoreError;

/// Failure of a CLI command, classified by exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("size cap exceeded: {0}")]
    Size(String),
}

impl CliError {
    pub const PARSE: i32 = 2;
    pub const VALIDATION: i32 = 3;
    pub const SIZE: i32 = 4;
    /// Returned by `verify` when a theorem check fails.
    pub const THEOREM_VIOLATION: i32 = 5;

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse(_) => Self::PARSE,
            CliError::Validation(_) => Self::VALIDATION,
            CliError::Size(_) => Self::SIZE,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::FrameTooLarge { .. }
            | CoreError::FrameTooLargeForDense { .. }
            | CoreError::FrameTooLargeForOracle { .. }
            | CoreError::FrameTooLargeForSweep { .. } => CliError::Size(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}
