use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The requested family/rank combination does not exist here.
    #[error("unsupported group: {0}")]
    Config(String),
    /// Malformed input: bad notation, mismatched groups, non-reduced words.
    #[error("{0}")]
    Usage(String),
    /// A bounded computation would exceed its configured limit.
    #[error("{what} exceeds cap {cap}")]
    Cap { what: String, cap: usize },
    /// The operation is only defined for some families.
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}
