use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A caller-supplied argument violated an operation's precondition.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// An internal cross-check failed. These indicate a bug or numerical
    /// breakdown rather than bad input.
    #[error("internal consistency failure: {0}")]
    Consistency(String),

    /// The requested scale lies in a range with no known closed-form answer.
    #[error("unsupported range: {0}")]
    UnsupportedRange(String),

    /// A combinatorial size guard tripped.
    #[error("size cap exceeded: {what} ({count} > {cap})")]
    CapExceeded {
        what: &'static str,
        count: usize,
        cap: usize,
    },

    /// A self-certifying construction failed one of its checks.
    #[error("verification failed at stage `{stage}`: {detail}")]
    Verification { stage: &'static str, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}

pub(crate) fn consistency(msg: impl Into<String>) -> Error {
    Error::Consistency(msg.into())
}
