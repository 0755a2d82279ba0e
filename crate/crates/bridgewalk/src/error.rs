use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("peripheral curve: {0}")]
    Peripheral(String),
    #[error("inessential curve")]
    Inessential,
    #[error("curve does not bound a disk")]
    NotADisk,
    #[error("curve is already disjoint from the admissible system")]
    NothingToDo,
    #[error("curve too large for explicit drawing: {0}")]
    TooLarge(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
}

impl Error {
    /// Process exit code used by the CLI.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Parse(_) => 2,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
