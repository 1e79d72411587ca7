use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported case: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("construction infeasible at step `{step}`: {reason}")]
    Infeasible { step: String, reason: String },

    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("search refused: n = {n} exceeds the bound {bound}")]
    Refused { n: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

pub(crate) fn infeasible(step: &str, reason: impl Into<String>) -> Error {
    Error::Infeasible {
        step: step.to_string(),
        reason: reason.into(),
    }
}
