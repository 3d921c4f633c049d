use thiserror::Error;

/// Failure modes shared by every module.
///
/// The three variants map onto the CLI's exit codes: `Domain` and `Usage`
/// are input errors, `Resource` is a guard refusal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The input exceeds one of the size guards.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// Mismatched arguments, e.g. elements from different field contexts.
    #[error("usage error: {0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
