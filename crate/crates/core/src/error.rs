//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by arithmetic, series, and verification routines.
///
/// Mathematical counterexamples are *not* errors; they are reported through
/// [`crate::report::CheckReport`]. An `Error` always means the computation
/// itself could not proceed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input must be positive, got {0}")]
    NonPositive(i64),

    #[error("modulus must be odd and positive, got {0}")]
    BadModulus(i64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("coefficient index {index} out of range (precision {precision})")]
    CoeffOutOfRange { index: usize, precision: usize },

    #[error("coefficient overflow in {op} at index {index}")]
    Overflow { op: &'static str, index: usize },

    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),

    #[error("unknown relation id `{0}`")]
    UnknownRelation(String),

    #[error("unknown conjecture id `{0}`")]
    UnknownConjecture(String),

    #[error("parameters violate side condition for `{family}`: {reason}")]
    SideCondition { family: String, reason: String },

    #[error("argument outside formula domain: {0}")]
    Domain(String),

    #[error("non-integral value where an integer was proved: {0}")]
    NonIntegral(String),

    #[error("index expression {expr} is negative at n = {n}")]
    NegativeIndex { expr: String, n: u64 },

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("backends disagree for {id} at n = {n}: enumeration gives {enumerate}, series gives {series}")]
    BackendDisagreement {
        id: String,
        n: u64,
        enumerate: String,
        series: String,
    },

    #[error("precision {given} too small; relation touches index {needed}")]
    PrecisionTooSmall { given: usize, needed: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
