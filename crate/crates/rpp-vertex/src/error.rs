//! Error type shared by all modules.

use thiserror::Error;

/// Errors raised by constructors and operations whose preconditions fail.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Parts are not weakly decreasing positive integers.
    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<usize>, reason: String },
    /// A cell lies outside the Young diagram it is used with.
    #[error("cell (row {row}, col {col}) is outside the shape {shape:?}")]
    CellOutsideShape { row: usize, col: usize, shape: Vec<usize> },
    /// A Maya window is too narrow to show constant tails.
    #[error("window half-width {half_width} too narrow, need at least {needed}")]
    WindowTooNarrow { half_width: usize, needed: usize },
    /// Filling rows do not match the shape.
    #[error("filling does not match shape {shape:?}: {reason}")]
    ShapeMismatch { shape: Vec<usize>, reason: String },
    /// A row or column of a filling decreases.
    #[error("monotonicity violated between cell {first:?} = {first_value} and cell {second:?} = {second_value}")]
    NotMonotone {
        first: (usize, usize),
        first_value: u64,
        second: (usize, usize),
        second_value: u64,
    },
    /// Consecutive slices do not interlace as the pattern demands.
    #[error("interlacing violated at step {step}: {reason}")]
    InterlacingViolated { step: usize, reason: String },
    /// An interaction pattern that is not the profile of any shape.
    #[error("pattern does not match any shape: {0}")]
    BadPattern(String),
    /// A vertex state outside the five allowed states.
    #[error("disallowed vertex state {0}")]
    DisallowedState(String),
    /// Row boundary data admits no valid configuration or is malformed.
    #[error("invalid row: {0}")]
    InvalidRow(String),
    /// Truncation orders of two series differ.
    #[error("mismatched truncation: {0} vs {1}")]
    TruncationMismatch(u32, u32),
    /// A geometric series `1/(1 - q^a t^b)` with `a = 0`.
    #[error("geometric series needs a positive q-exponent")]
    ZeroQExponent,
    /// The two colours of a pair have different shapes.
    #[error("pair shapes differ: {0:?} vs {1:?}")]
    PairShapeMismatch(Vec<usize>, Vec<usize>),
    /// Sliding was applied to a pair that has coupled pairs.
    #[error("pair violates the t = 0 constraints (g = {0})")]
    NotNonInteracting(u64),
    /// An internal consistency check failed; indicates a bug.
    #[error("internal inconsistency: {0}")]
    Internal(String),
    /// Malformed user input (JSON, flags).
    #[error("bad input: {0}")]
    BadInput(String),
}

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
