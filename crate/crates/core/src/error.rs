use thiserror::Error;

/// Errors raised by group construction, the closed-form evaluator and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot multiply elements of different representations")]
    RepresentationMismatch,
    #[error("left factor is not of circle type; the group does not preserve the Hopf fibration")]
    NotHopfPreserving,
    #[error("no rational with denominator dividing {max_denominator} within tolerance of {value}")]
    SnapFailure { value: String, max_denominator: u64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported family `{0}`")]
    UnsupportedFamily(String),
    #[error("invalid parameters: {}", .0.join("; "))]
    InvalidSpec(Vec<String>),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
