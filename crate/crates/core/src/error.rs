use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown affine type `{0}`")]
    UnknownType(String),

    #[error("affine type `{0}` belongs to the A_2n^(2) family, which is not supported")]
    ExcludedType(String),

    #[error("invalid type data for `{label}`: {reason}")]
    InvalidData { label: String, reason: String },

    #[error("vector is not a finite root: {0}")]
    NotARoot(String),

    #[error("vector has a nonzero Lambda_0 component; the level-zero action needs level 0")]
    NotLevelZero,

    #[error("non-integral pairing {0}: datum is inconsistent")]
    NonIntegral(String),

    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("node index {index} out of range for rank {rank}")]
    NodeOutOfRange { index: usize, rank: usize },

    #[error("element has a nonzero X part; only affine Hecke elements have a Bernstein expansion")]
    HasXPart,

    #[error("no antidominant decomposition found for {0}")]
    Decomposition(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
