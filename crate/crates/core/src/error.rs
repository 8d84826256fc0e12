use thiserror::Error;

use crate::instance::Rank;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("interval [{lo}, {hi}] has lo > hi")]
    InvertedInterval { lo: Rank, hi: Rank },
    #[error("domain [{lo}, {hi}] must have lo < hi")]
    InvalidDomain { lo: Rank, hi: Rank },
    #[error("{what} #{index} escapes its domain")]
    ContainmentViolation { what: &'static str, index: usize },
    #[error("{what} #{index} is degenerate (lo = hi) under strict validation")]
    DegenerateInterval { what: &'static str, index: usize },
    #[error("non-finite coordinate {0}")]
    NonFiniteCoordinate(f64),
    #[error("empty input")]
    EmptyInput,
    #[error("invalid size {n}: {reason}")]
    InvalidSize { n: usize, reason: &'static str },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("link position {k} out of range 2..={n}")]
    LinkOutOfRange { k: usize, n: usize },
    #[error("value {value} out of range 0..{n}")]
    ValueOutOfRange { value: Rank, n: usize },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("generator self-check failed: {0}")]
    SelfCheck(String),
    #[error("malformed instance: {0}")]
    Malformed(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
