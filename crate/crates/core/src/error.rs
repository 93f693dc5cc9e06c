use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("resource limit: ring order {order} exceeds the cap of {cap}")]
    ResourceLimit { order: u64, cap: u64 },

    #[error("search budget exhausted (best bounds {lower}..={upper})")]
    Timeout { lower: usize, upper: usize },

    #[error("graph too large for this routine: {vertices} vertices (limit {limit})")]
    TooLarge { vertices: usize, limit: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("out of scope: {0}")]
    OutOfScope(String),

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("certificate failed re-validation: {0}")]
    InvalidCertificate(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
