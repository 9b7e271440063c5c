use thiserror::Error;

/// Errors surfaced by the exact layers and the verification registries.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("schema violation for {id}: {reason}")]
    Schema { id: String, reason: String },

    #[error("unknown registry id: {0}")]
    UnknownId(String),

    #[error("series order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("invalid parameter value: {0}")]
    BadParam(String),
}

impl Error {
    pub fn schema(id: &str, reason: impl Into<String>) -> Self {
        Error::Schema {
            id: id.to_string(),
            reason: reason.into(),
        }
    }

    pub fn domain(reason: impl Into<String>) -> Self {
        Error::Domain(reason.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
