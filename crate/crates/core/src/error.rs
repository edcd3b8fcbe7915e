use thiserror::Error;

use crate::exact_arith::{ArithError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("invalid part set: {0}")]
    InvalidParts(String),
    #[error("parts {parts:?} are not pairwise coprime")]
    NotCoprime { parts: Vec<u64> },
    #[error("{what} requires at least {min} parts, got {parts:?}")]
    TooFewParts {
        what: &'static str,
        min: usize,
        parts: Vec<u64>,
    },
    #[error("no closed form for k = {k} (parts {parts:?}); supported k is 2..=5")]
    UnsupportedArity { k: usize, parts: Vec<u64> },
    #[error("x = {x} is outside [{low}, {high}] for parts {parts:?}")]
    OutOfRange {
        x: u64,
        low: u64,
        high: String,
        parts: Vec<u64>,
    },
    #[error("argument {value} for parts {parts:?} is too large for the counting table")]
    TooLarge { value: String, parts: Vec<u64> },
    #[error("{what} produced non-integral value {value} for parts {parts:?}")]
    NonIntegral {
        what: &'static str,
        value: Rational,
        parts: Vec<u64>,
    },
    #[error(
        "rejection sampling gave up after {attempts} attempts (k = {k}, max part = {max_part})"
    )]
    SamplingExhausted {
        k: usize,
        max_part: u64,
        attempts: usize,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
