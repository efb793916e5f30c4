use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: u32, rank: usize },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("out of bounds: {0}")]
    Bounds(String),
    #[error("the identity has no lower central series degree")]
    Identity,
    #[error("element lies deeper than degree {0}")]
    Deeper(usize),
    #[error("alphabet mismatch")]
    AlphabetMismatch,
    #[error("not a pure braid")]
    NotPure,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
