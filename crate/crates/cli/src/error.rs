use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] qko_core::Error),
}

impl CliError {
    /// 1 for an internal structure mismatch, 2 for anything the caller
    /// can fix by changing the arguments.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(qko_core::Error::StructureMismatch(_)) => 1,
            _ => 2,
        }
    }
}
