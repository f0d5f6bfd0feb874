use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("resource cap exceeded: {what} (reached depth {reached_depth}, {elements} elements)")]
    ResourceCap {
        what: String,
        reached_depth: usize,
        elements: usize,
    },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
