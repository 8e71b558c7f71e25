use thiserror::Error;

/// Errors surfaced by the core operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),
    #[error("empty operand: {0}")]
    EmptyOperand(String),
    #[error("operation not applicable: {0}")]
    NotApplicable(String),
    #[error("domination chain exceeded {0} steps (intransitive strict cycle)")]
    ChainOverflow(usize),
    #[error("malformed system: {0}")]
    MalformedSystem(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid sizes: {0}")]
    InvalidSizes(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
