use thiserror::Error;

/// Error type shared by all modules.
///
/// The three variants mirror the failure classes surfaced by the CLI:
/// domain errors (invalid arguments), resource errors (an enumeration or
/// table request past its guard), and numeric errors (an evaluation that
/// could not reach its target accuracy or would overflow).
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource guard exceeded: {0}")]
    Resource(String),
    #[error("numeric error: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }
}
