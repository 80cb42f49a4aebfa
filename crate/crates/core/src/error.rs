use thiserror::Error;

/// Errors raised by the library. Every variant describes a violated
/// precondition; none of them signal a mathematical counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<usize>),

    #[error("inner shape ({inner}) is not contained in outer shape ({outer})")]
    NotContained { outer: String, inner: String },

    #[error("declared length {ell} is smaller than the partition length {length}")]
    InvalidLength { ell: usize, length: usize },

    #[error("modulus must be at least {min}, got {t}")]
    InvalidModulus { t: usize, min: usize },

    #[error("{d} does not divide {t}")]
    NotDivisor { d: usize, t: usize },

    #[error("the {t}-cores of ({outer}) and ({inner}) differ")]
    CoreMismatch { outer: String, inner: String, t: usize },

    #[error("no size-{t} border-strip removal path from ({outer}) down to ({inner})")]
    NoRemovalPath { outer: String, inner: String, t: usize },

    #[error("not a border strip: {0}")]
    InvalidStrip(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid ribbon chain: {0}")]
    InvalidChain(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
