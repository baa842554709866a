use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("polynomial must have degree at least 1")]
    ConstantPolynomial,
    #[error("leading coefficient is zero")]
    ZeroLeadingCoefficient,
    #[error("partition parts must be positive and weakly decreasing: {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("partition {parts:?} does not sum to {n}")]
    NotAPartitionOf { parts: Vec<usize>, n: usize },
    #[error("cannot compare partitions of {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("n must be at least 1")]
    NonPositive,
    #[error("symbolic discriminants are capped at n <= {cap} (requested n = {n})")]
    SymbolicCapExceeded { n: usize, cap: usize },
    #[error("exact division failed: divisor does not divide dividend")]
    NotDivisible,
    #[error("root {0} appears more than once")]
    RepeatedRoot(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degree formula produced a non-integral value {0}")]
    NonIntegral(String),
}
