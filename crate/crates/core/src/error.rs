//! Crate-wide error type.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by the library.
///
/// Domain errors (`ZeroDenominator`, `OutOfRange`, `BadSpec`, ...) signal
/// contract violations on inputs; `Capacity` signals a size guard refusing an
/// exponential sweep; `Internal` signals a cross-check failure that can only
/// come from a bug, never from user input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A rational was constructed with denominator zero.
    ZeroDenominator,
    /// A value failed to parse (rationals, matrices, diagrams, schemes).
    Parse(String),
    /// A grid index or index set fell outside the host grid.
    OutOfRange { what: String },
    /// A minor specification is malformed (sizes differ, not increasing, empty).
    BadSpec(String),
    /// Matrix/diagram/scheme shapes disagree.
    ShapeMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// The black-box set violates the Cauchon condition.
    NotCauchon,
    /// A sequence of boxes is not lacunary for the given diagram.
    NotLacunary(String),
    /// A precondition of the requested operation does not hold.
    Precondition(String),
    /// A size guard refused the request; see `TNN_MAX_CELLS`.
    Capacity { cells: usize, limit: usize },
    /// Two logically equivalent code paths disagreed. Always a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => write!(f, "denominator must be nonzero"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::OutOfRange { what } => write!(f, "index out of range: {what}"),
            Error::BadSpec(msg) => write!(f, "invalid minor specification: {msg}"),
            Error::ShapeMismatch { expected, found } => write!(
                f,
                "shape mismatch: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Error::NotCauchon => write!(f, "black boxes violate the Cauchon condition"),
            Error::NotLacunary(msg) => write!(f, "not a lacunary sequence: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition not met: {msg}"),
            Error::Capacity { cells, limit } => write!(
                f,
                "grid of {cells} cells exceeds the capacity guard of {limit} \
                 (set TNN_MAX_CELLS to raise it)"
            ),
            Error::Internal(msg) => write!(f, "internal inconsistency: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
