use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),

    #[error("invalid rigged pair: {0}")]
    InvalidRiggedPair(String),

    #[error("pair (I={i}, J={j}) is not admissible: {reason}")]
    NotAdmissible { i: String, j: String, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("refusing to materialize an infinite set: supply a cap on rigging entries")]
    Unbounded,

    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
