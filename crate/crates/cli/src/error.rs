use thiserror::Error;

/// Process exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    /// A verification check failed, or output could not be written.
    pub const FAILURE: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const OVERFLOW: i32 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Engine(#[from] faddeyeva::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Engine(faddeyeva::Error::OverflowDomain { .. }) => exit::OVERFLOW,
            CliError::Engine(_) => exit::USAGE,
            CliError::Io(_) => exit::FAILURE,
        }
    }
}
