use num_bigint::BigUint;

use crate::exact::Rational;

/// Errors raised across the crate. `Parse` and `InvalidParameter` are
/// usage-level failures; everything else reports a mathematical or
/// structural defect in the input.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("cannot take a square root of the negative rational {0}")]
    NegativeRadicand(Rational),
    #[error(
        "square-free factorization of cofactor {cofactor} exceeds trial-division bound {bound}"
    )]
    FactorBound { cofactor: BigUint, bound: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("element {index} has no transpose partner in the basis")]
    NotStarClosed { index: usize },
    #[error("linearly dependent input: rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("product of elements {i} and {j} lies outside the span of the basis")]
    NotInSpan { i: usize, j: usize },
    #[error("not a real linear character: {0}")]
    InvalidCharacter(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("character-theoretic check failed on component {component}: {detail}")]
    CharacterTheory { component: usize, detail: String },
    #[error("internal consistency check failed: {0}")]
    Inconsistency(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Usage/parse failures map to process exit code 2, mathematical
    /// failures to exit code 1.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::InvalidParameter(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
