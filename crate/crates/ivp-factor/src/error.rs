use num_bigint::BigUint;
use thiserror::Error;

use crate::poly::IntPoly;

#[derive(Debug, Error)]
pub enum Error {
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("zero factor in input")]
    ZeroFactor,
    #[error("denominator must be positive")]
    ZeroDenominator,
    #[error("expression has no non-constant factor")]
    NoPolynomialFactor,
    #[error("residual integer content {content} is not a unit; elements under study carry sign and denominator only")]
    NonUnitContent { content: BigUint },
    #[error("factor {factor} is reducible over the rationals: ({left})*({right})")]
    ReducibleFactor {
        factor: IntPoly,
        left: IntPoly,
        right: IntPoly,
    },
    #[error("could not certify {factor} irreducible over the rationals (use assert-irreducible to accept it unchecked)")]
    UncertifiedFactor { factor: IntPoly },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("class valuation at prime {p} exceeded the depth ceiling {k_max}")]
    DepthExceeded { p: u64, k_max: u32 },
    #[error("factor multiset has {slots} slots, above the cap {cap}")]
    TooLarge { slots: u32, cap: u32 },
    #[error("partition search space of size {size} exceeds the cap {cap}")]
    PartitionCap { size: u128, cap: u128 },
    #[error("search exhausted: {what}")]
    SearchExhausted { what: String },
    #[error("hypothesis failed: {what}")]
    Hypothesis { what: String },
    #[error("invalid parameter: {what}")]
    InvalidParams { what: String },
    #[error("self-check failed: {what}")]
    SelfCheck { what: String },
    #[error(
        "refinement would require integer constant parts, which canonical elements cannot carry"
    )]
    ConstantRefinement,
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code convention: 2 for input errors, 3 for resource caps,
    /// 1 for mathematical negatives surfaced as errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::DepthExceeded { .. }
            | Error::TooLarge { .. }
            | Error::PartitionCap { .. }
            | Error::SearchExhausted { .. } => 3,
            Error::Hypothesis { .. } | Error::ConstantRefinement => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
