use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("singular linear system: {0}")]
    Singular(String),

    #[error("lambda = -1 makes the R-matrix non-invertible")]
    LambdaMinusOne,

    #[error("invalid data: {0}")]
    InvalidData(String),

    #[error("unknown or unsupported generator: {0}")]
    UnknownGenerator(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("rewriting system rejected: {0}")]
    Rewriter(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::InvalidData(e.to_string())
    }
}
