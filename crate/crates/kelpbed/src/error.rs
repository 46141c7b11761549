use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed input text; exit status 2.
    #[error("parse error: {0}")]
    Parse(String),
    /// Well-formed input violating a mathematical precondition; exit status 1.
    #[error("{0}")]
    Domain(#[from] kelpbed_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    /// A check that ran to completion and found a violation; exit status 1.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(kelpbed_core::Error::Syntax(_)) => 2,
            CliError::Domain(_) | CliError::Failed(_) | CliError::Io(_) => 1,
        }
    }
}
