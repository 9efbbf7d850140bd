use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An integer sequence violates the inversion-sequence bound `0 <= e_i < i`.
    #[error("entry {value} at position {position} violates 0 <= e_i <= {}", position - 1)]
    InvalidEntry { position: usize, value: u32 },

    /// A word is not a reduced pattern (its reduction differs from itself).
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<u32>),

    /// The trivial relation `-` is not allowed in a consecutive pair pattern.
    #[error("the trivial relation '-' is not allowed here")]
    DashNotAllowed,

    /// Parse failure for sequences, patterns or paths.
    #[error("parse error: {0}")]
    Parse(String),

    /// A computation was asked for a size above its resource guard.
    #[error("{what}: n = {n} exceeds the resource guard {max}")]
    ResourceLimit { what: &'static str, n: usize, max: usize },

    /// A bijection was applied outside its documented domain.
    #[error("domain violation for {map}: {reason}")]
    DomainViolation { map: &'static str, reason: String },

    /// Unknown name in a fixed catalog (series, closed forms, suites).
    #[error("unknown {kind} name: {name}")]
    UnknownName { kind: &'static str, name: String },

    /// Division by a series whose constant term is not invertible.
    #[error("series division requires an invertible constant term")]
    NonInvertibleConstant,

    /// Square root of a series whose constant term is not 1.
    #[error("series square root requires constant term 1")]
    SqrtConstantTerm,

    /// Composition with an inner series whose constant term is nonzero.
    #[error("series composition requires inner constant term 0")]
    ComposeConstantTerm,

    /// Dividing by z^k a series with a nonzero coefficient below z^k.
    #[error("cannot divide by z^{power}: coefficient of z^{index} is nonzero")]
    NotDivisibleByZ { power: usize, index: usize },

    /// A coefficient expected to be a (machine-width) integer was not.
    #[error("coefficient of z^{index} is not an integer count: {value}")]
    NonIntegralCoefficient { index: usize, value: String },
}
