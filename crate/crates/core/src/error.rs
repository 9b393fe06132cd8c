use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse alpha spec {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("{0} is rational, an irrational value is required")]
    RationalValue(String),

    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_owned(),
            reason: reason.into(),
        }
    }

    /// Prefixes a precision diagnostic with the denominator being certified.
    pub(crate) fn at_q(self, q: impl std::fmt::Display) -> Self {
        match self {
            Error::PrecisionExhausted(msg) => Error::PrecisionExhausted(format!("q = {q}: {msg}")),
            other => other,
        }
    }

    pub fn is_precision(&self) -> bool {
        matches!(self, Error::PrecisionExhausted(_))
    }
}
