//! Exact enumeration of inversion sequences avoiding consecutive patterns of
//! relations, together with the bijections, recurrences and generating
//! functions that cross-check the counts.
//!
//! An *inversion sequence* of length `n` is an integer sequence
//! `e_1 e_2 … e_n` with `0 <= e_i < i`. A *consecutive pattern of relations*
//! is a pair `(R1, R2)` of binary relations from `{<=, >=, <, >, =, !=}`; an
//! inversion sequence contains it if `e_i R1 e_{i+1}` and `e_{i+1} R2 e_{i+2}`
//! for some `i`, and avoids it otherwise. The crate provides:
//!
//! * [`core`] — sequences, relation symbols, patterns, occurrence detection,
//!   the `dist` statistic and the complement involution;
//! * [`enumerate`] — pruned exhaustive counting, occurrence-position
//!   profiles, and classification of the 36 patterns into Wilf / strong /
//!   super-strong equivalence classes;
//! * [`bijections`] — explicit bijections onto involutions, compositions,
//!   subsets, Dyck paths and (multi-)marked Dyck paths, all with inverses and
//!   image validation;
//! * [`series`] — exact truncated power series over big rationals (univariate
//!   in `z`, or with polynomial-in-`t` coefficients) and a catalog of closed
//!   form generating functions;
//! * [`recurrences`] — closed forms and recurrences computed independently of
//!   brute force;
//! * [`permutations`] — vincular pattern avoidance and the permutation side
//!   of the correspondences;
//! * [`checks`] — the named verification suites used by the CLI.
//!
//! Positions in all reported results are 1-based.

pub mod bijections;
pub mod checks;
pub mod core;
pub mod enumerate;
mod error;
pub mod permutations;
pub mod recurrences;
pub mod series;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
