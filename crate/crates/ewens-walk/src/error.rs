use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A size guard was exceeded (partition enumeration, table construction,
    /// oracle budget).
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    /// Inputs violate a precondition (mismatched partition sizes, malformed
    /// partitions, out-of-range indices, non-positive theta).
    #[error("domain error: {0}")]
    Domain(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
