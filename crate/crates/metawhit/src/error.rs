use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid context: {0}")]
    InvalidContext(String),
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    #[error("resource limit exceeded at depth {depth}: {detail}")]
    ResourceLimit { depth: u32, detail: String },
    #[error("division by zero")]
    DivisionByZero,
}

pub type Result<T> = std::result::Result<T, Error>;
