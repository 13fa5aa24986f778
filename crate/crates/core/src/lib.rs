//! Exact recognition of totally nonnegative matrix cells.
//!
//! A real matrix is *totally nonnegative* (tnn) when every minor is ≥ 0, and
//! *totally positive* (TP) when every minor is > 0. The tnn matrices of a
//! fixed shape split into cells indexed by which minors vanish; the nonempty
//! cells are parametrised by Cauchon diagrams. This crate decides membership
//! of a cell with exactly `m·p` minor evaluations instead of sweeping all
//! `C(m+p, m) − 1` minors:
//!
//! * [`exact`] — arbitrary-precision rationals, the dense [`Matrix`] type and
//!   grid positions. All arithmetic is exact; there are no epsilons anywhere.
//! * [`minors`] — exact minor evaluation (fraction-free Bareiss elimination),
//!   initial/final minor families, the antidiagonal reflection and the
//!   Gasca–Peña total-positivity test.
//! * [`diagram`] — Cauchon diagrams: validation, exhaustive enumeration and
//!   census statistics.
//! * [`reduction`] — the Cauchon reduction sweep `M ↦ M̃`, cell
//!   classification, and its inverse used to build cell representatives.
//! * [`lacunary`] — lacunary sequences: validation, the constructive
//!   algorithm, and exhaustive search.
//! * [`recognition`] — per-cell minor schemes (`m·p` minors) and the
//!   membership test.
//! * [`oracle`] — brute-force all-minors ground truth for validation.
//! * [`io`] — JSON/ASCII wire formats for matrices, diagrams, schemes and
//!   reports.

pub mod diagram;
pub mod error;
pub mod exact;
pub mod io;
pub mod lacunary;
pub mod minors;
pub mod oracle;
pub mod recognition;
pub mod reduction;
pub mod rng;

mod capacity;

pub use diagram::{is_cauchon, CauchonDiagram, DiagramCensus};
pub use error::{Error, Result};
pub use exact::{lex_successor, GridIndex, Matrix, Rational};
pub use lacunary::{is_lacunary, LacunarySequence};
pub use minors::MinorSpec;
pub use oracle::ZeroPattern;
pub use recognition::{CellMinorScheme, MembershipReport};
pub use reduction::{CellAssignment, ReductionTrace};
