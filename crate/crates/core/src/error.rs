use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An element index or parameter lies outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A configured size bound would be exceeded.
    #[error("capacity exceeded: {what} (bound {bound})")]
    Capacity { what: String, bound: u64 },

    /// An input violates a documented precondition.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A self-check failed; this indicates a bug rather than bad input.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub fn capacity(what: impl Into<String>, bound: u64) -> Self {
        Error::Capacity {
            what: what.into(),
            bound,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
