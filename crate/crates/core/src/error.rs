use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A solver or constructor hit a configured size limit. `lower`/`upper`
    /// carry whatever bounds were known when the limit was hit.
    #[error("capacity exceeded: {what} (limit {limit})")]
    CapacityExceeded {
        what: String,
        limit: usize,
        lower: Option<usize>,
        upper: Option<usize>,
    },

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn capacity(what: impl Into<String>, limit: usize) -> Self {
        Error::CapacityExceeded {
            what: what.into(),
            limit,
            lower: None,
            upper: None,
        }
    }

    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::CapacityExceeded { .. })
    }
}
