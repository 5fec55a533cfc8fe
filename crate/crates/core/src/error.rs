use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument fell outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// An enclosure could not be tightened to the requested width.
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
    /// Two independent evaluation routes produced disjoint enclosures.
    #[error("evaluation routes disagree: {0}")]
    Disagreement(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
