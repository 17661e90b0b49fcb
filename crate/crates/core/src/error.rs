use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// Malformed graph6 or certificate text.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A documented precondition of the operation does not hold for the input.
    #[error("contract violated: {0}")]
    Contract(String),

    /// A construction failed its own verification. This signals a bug.
    #[error("construction failed self-verification: {0}")]
    Construction(String),

    /// The search ran out of budget before reaching a decision.
    #[error("search budget exhausted after {nodes} nodes; result indeterminate")]
    Indeterminate { nodes: u64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn construction(msg: impl Into<String>) -> Self {
        Error::Construction(msg.into())
    }

    pub(crate) fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: msg.into(),
        }
    }
}
