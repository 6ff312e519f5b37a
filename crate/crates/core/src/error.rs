use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input (bad names, shapes, dangling references).
    #[error("input error: {0}")]
    Input(String),

    /// A precondition of a universal construction was not met, e.g. a leg
    /// passed to `factor` that does not equalize.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// Well-formed input that violates a structural law (functoriality,
    /// associativity, naturality).
    #[error("validation failed: {0}")]
    Invalid(String),

    /// A configured size cap would be exceeded.
    #[error("resource limit: {what} needs {size}, cap is {cap}")]
    Resource { what: String, size: u128, cap: u128 },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn resource(what: impl Into<String>, size: u128, cap: u128) -> Self {
        Error::Resource { what: what.into(), size, cap }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
