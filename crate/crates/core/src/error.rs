//! Error type shared across the crate.

use num::bigint::BigInt;
use thiserror::Error;

/// Errors produced by validation, enumeration limits, and the internal
/// exactness checks of the formula evaluators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list must not be empty")]
    EmptyGenerators,

    #[error("generators must be positive")]
    ZeroGenerator,

    #[error("generators must be coprime (common divisor {0})")]
    NotCoprime(BigInt),

    /// The semigroup contains 1 (or a family has a = 1), so every positive
    /// integer is representable and the non-representable set is empty.
    #[error("trivial numerical semigroup: every positive integer is representable")]
    Trivial,

    #[error("base {0} is not one of the generators")]
    BaseNotGenerator(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("sieve bound {requested} exceeds the memory cap of {cap} entries")]
    MemoryCap { requested: u64, cap: u64 },

    /// The sieve did not end in `window` consecutive representable integers,
    /// so completeness of the non-representable set cannot be certified.
    #[error("sieve bound {bound} too small: no closing window of {window} representable integers")]
    IncompleteSieve { bound: u64, window: u64 },

    #[error("{0} is too large to enumerate")]
    TooLarge(&'static str),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    /// A boundary index produced a negative power of zero that was not
    /// cancelled by a vanishing polynomial factor.
    #[error("zero raised to a negative power")]
    ZeroToNegativePower,

    /// A quantity that must be an integer (every Sylvester sum is one) came
    /// out fractional; this always indicates a formula transcription bug.
    #[error("expected an integer in {context}, got {value}")]
    NonInteger {
        context: &'static str,
        value: String,
    },

    /// Two routes that must agree disagreed.
    #[error("internal consistency failure in {context}: {detail}")]
    Inconsistency {
        context: &'static str,
        detail: String,
    },
}
