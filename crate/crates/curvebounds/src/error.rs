//! Error type shared by every module.
//!
//! Domain violations surface as [`Error`] values. Divisions that the theory
//! guarantees to be exact are not represented here: those are enforced with
//! assertions and panic, since a remainder would mean the implementation
//! itself is wrong, not the input.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Domain and hypothesis violations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An integer argument fell outside its documented range.
    #[error("{name} must be at least {min}, got {got}")]
    BelowMinimum {
        name: &'static str,
        min: i64,
        got: i64,
    },

    /// An operation that assumes `d1 <= d2` received an unordered pair.
    #[error("operation requires d1 <= d2, got ({d1}, {d2})")]
    UnorderedPair { d1: i64, d2: i64 },

    /// A hypothesis of a theorem-backed operation does not hold.
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    /// An h-vector literal is malformed.
    #[error("invalid h-vector: {0}")]
    InvalidHVector(String),

    /// Enumeration was requested outside the configured degree window.
    #[error("enumeration degree {d} outside supported range {min}..={max}")]
    EnumerationRange { d: i64, min: i64, max: i64 },

    /// A grid was requested with an empty or inverted degree range.
    #[error("invalid degree range: need {min_allowed} <= d_min < d_max, got {d_min}..{d_max}")]
    InvalidRange {
        d_min: i64,
        d_max: i64,
        min_allowed: i64,
    },

    /// A residual curve would have nonpositive degree.
    #[error("residual degree {ci_degree} - {d_in} is not positive")]
    ResidualDegree { ci_degree: i64, d_in: i64 },

    /// A genus exchange would require a half-integer.
    #[error("parity violation: {0}")]
    Parity(String),
}
