use crate::subset::Subset;
use thiserror::Error;

/// A rank axiom, named so violation reports can point at the failed law.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// rank(empty) = 0
    EmptyRank,
    /// rank(A) <= rank(A + x) <= rank(A) + 1
    UnitIncrease,
    /// rank(A u B) + rank(A n B) <= rank(A) + rank(B)
    Submodularity,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank axiom {axiom:?} violated; witness subsets {a:#b}, {b:#b}")]
    AxiomViolation { axiom: Axiom, a: Subset, b: Subset },

    #[error("basis exchange fails: no replacement in {b2:#b} for element {x} of {b1:#b}")]
    ExchangeViolation { b1: Subset, b2: Subset, x: usize },

    #[error("invalid flag: {0}")]
    InvalidFlag(String),

    #[error("{0}")]
    DomainError(String),

    #[error("{what} has size {n}, above the cap {cap}")]
    SizeCapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("operands have mismatched sizes: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("not invertible: {0}")]
    NonInvertible(String),

    #[error("family does not support this request: {0}")]
    UnsupportedFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
