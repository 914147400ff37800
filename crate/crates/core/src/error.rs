use thiserror::Error;

/// Errors raised by field construction, polynomial arithmetic and the
/// factorization pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,

    #[error("constant polynomial where positive degree is required")]
    ConstantPolynomial,

    #[error("polynomial is not twosided")]
    NotTwosided,

    #[error("coefficient outside the invariant subfield: {0}")]
    NotInCenter(String),

    #[error("unsupported coefficient field: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("exact division failed: remainder is nonzero")]
    InexactDivision,

    #[error("zero divisor search exhausted {trials} trials; retry with another seed")]
    TrialsExhausted { trials: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
