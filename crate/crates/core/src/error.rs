//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be a positive integer, got {0}")]
    InvalidRank(i64),

    #[error("parabolic index k = {k} outside 1..={n} for rank n = {n}")]
    InvalidParabolic { n: usize, k: usize },

    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("not a signed permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid index pair: {0}")]
    InvalidPair(String),

    #[error("highest weight must be a weakly decreasing tuple of nonnegative integers: {0}")]
    NonDominantWeight(String),

    #[error("half-integral (spin) highest weights are not supported: {0}")]
    SpinWeight(String),

    #[error("not a half-integer: {0}")]
    NotHalfInt(String),

    #[error("operation applies to {expected}, but k = {k}, n = {n}")]
    WrongParabolic {
        expected: &'static str,
        n: usize,
        k: usize,
    },

    #[error("unsupported evaluation point t = {0}")]
    UnsupportedEvaluationPoint(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration cap exceeded: rank {n} > cap {cap}")]
    ResourceCap { n: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
