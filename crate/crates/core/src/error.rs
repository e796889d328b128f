use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("not a permutation of 1..={n}: {images:?}")]
    NotPermutation { n: usize, images: Vec<usize> },

    #[error("cocharacter {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("guard exceeded: {what} is {got}, limit {limit}")]
    Guard { what: &'static str, got: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("search depth {0} exhausted before the frontier emptied")]
    DepthExceeded(usize),

    /// A consistency check between two independent routes failed.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub fn guard(what: &'static str, got: usize, limit: usize) -> Self {
        Error::Guard { what, got, limit }
    }
}
