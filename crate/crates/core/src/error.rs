use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a supported prime")]
    NotPrime(u64),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid code parameters: {0}")]
    Spec(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("invalid topology: {0}")]
    Topology(String),
    #[error("inconsistent labeling: {0}")]
    Labeling(String),
    #[error("unknown name: {0}")]
    Unknown(String),
    #[error("search budget of {budget} node expansions exceeded")]
    Budget { budget: u64 },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
