use thiserror::Error;

/// Errors raised by the library. Each variant has a stable kebab-case
/// [`name`](Error::name) used by the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    Dimension { expected: usize, found: usize },
    #[error("generators {0:?} do not generate a numerical semigroup (gcd must be 1)")]
    InvalidSemigroup(Vec<u64>),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("unsupported field: {0} is not an odd prime")]
    UnsupportedField(u64),
    #[error("table too short: need at least {needed} values, have {have}")]
    NeedsLongerTable { needed: usize, have: usize },
    #[error("not found: {0}")]
    NotFound(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("exponent overflow")]
    Overflow,
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::Dimension { .. } => "dimension",
            Error::InvalidSemigroup(_) => "invalid-semigroup",
            Error::InvalidArgument(_) => "invalid-argument",
            Error::Unsupported(_) => "unsupported-input",
            Error::UnsupportedField(_) => "unsupported-field",
            Error::NeedsLongerTable { .. } => "needs-longer-table",
            Error::NotFound(_) => "not-found",
            Error::Parse { .. } => "parse",
            Error::Precondition(_) => "precondition-violation",
            Error::Overflow => "overflow",
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn check_len(expected: usize, found: usize) -> Result<(), Error> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::Dimension { expected, found })
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
