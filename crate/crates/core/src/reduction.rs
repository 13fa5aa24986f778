//! The Cauchon reduction sweep, cell classification, and the inverse sweep
//! used to build cell representatives.
//!
//! Reduction walks the grid positions from `(m,p)` down to `(1,2)`. At
//! position `(j,β)` with nonzero pivot `x[j,β]`, every entry strictly
//! north-west of the pivot is updated by
//! `x[i,α] ← x[i,α] − x[i,β]·x[j,β]⁻¹·x[j,α]`; a zero pivot makes the step
//! a no-op. The result `M̃ = (t[i,α])` decides everything: `M` is totally
//! nonnegative exactly when `M̃` is nonnegative and its zero entries form a
//! Cauchon diagram, and that diagram names the cell of `M`.
//!
//! Every step leaves the pivot row, the pivot column and all positions at or
//! after the pivot untouched, so each step is invertible by adding back the
//! same product. Restoration runs the inverted steps in ascending order and
//! turns a prescribed nonnegative Cauchon matrix of t-values into a matrix
//! of the corresponding cell.

use num_traits::{One, Signed, Zero};

use crate::diagram::CauchonDiagram;
use crate::error::{Error, Result};
use crate::exact::{sweep_positions, GridIndex, Matrix, Rational};
use crate::minors::{minor, MinorSpec};
use crate::rng::SplitMix64;

/// One sweep step: the position and the pivot value read there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub position: GridIndex,
    pub pivot: Rational,
}

/// Full record of a reduction run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub input: Matrix,
    /// Steps in execution order: positions descending from `(m,p)` to `(1,2)`.
    pub steps: Vec<ReductionStep>,
    /// The matrix of t-values `M̃`.
    pub t_matrix: Matrix,
    /// When requested, the matrix state after each step, aligned with `steps`.
    pub intermediates: Option<Vec<Matrix>>,
}

/// Runs the reduction sweep. Memory-lean: no intermediate matrices kept.
pub fn cauchon_reduce(m: &Matrix) -> ReductionTrace {
    reduce_inner(m, false)
}

/// Runs the reduction sweep keeping every intermediate matrix.
pub fn cauchon_reduce_traced(m: &Matrix) -> ReductionTrace {
    reduce_inner(m, true)
}

fn reduce_inner(m: &Matrix, keep: bool) -> ReductionTrace {
    let (rows, cols) = m.shape();
    let mut work = m.clone();
    let mut steps = Vec::new();
    let mut intermediates = keep.then(Vec::new);
    for &r in sweep_positions(rows, cols).iter().rev() {
        let pivot = work.at(r).clone();
        if !pivot.is_zero() {
            apply_step(&mut work, r, &pivot, StepDirection::Reduce);
        }
        steps.push(ReductionStep { position: r, pivot });
        if let Some(states) = intermediates.as_mut() {
            states.push(work.clone());
        }
    }
    ReductionTrace {
        input: m.clone(),
        steps,
        t_matrix: work,
        intermediates,
    }
}

enum StepDirection {
    Reduce,
    Restore,
}

/// Updates all entries strictly north-west of `r`. Entries in the pivot row
/// and pivot column are read but never written, so in-place is sound.
fn apply_step(work: &mut Matrix, r: GridIndex, pivot: &Rational, dir: StepDirection) {
    let inv = Rational::one() / pivot;
    for i in 1..r.row {
        for a in 1..r.col {
            let delta = work.get(i, r.col) * &inv * work.get(r.row, a);
            let cur = work.get(i, a);
            let next = match dir {
                StepDirection::Reduce => cur - &delta,
                StepDirection::Restore => cur + &delta,
            };
            work.set(i, a, next);
        }
    }
}

/// Outcome of classifying a matrix: the t-matrix, and the cell diagram when
/// the matrix is totally nonnegative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellAssignment {
    pub t_matrix: Matrix,
    /// `Some` exactly when the matrix is totally nonnegative; the diagram's
    /// black boxes are then the zero positions of the t-matrix.
    pub diagram: Option<CauchonDiagram>,
}

impl CellAssignment {
    pub fn is_tnn(&self) -> bool {
        self.diagram.is_some()
    }
}

/// Total nonnegativity and cell assignment in one sweep: `M` is tnn iff its
/// t-matrix is nonnegative with a Cauchon zero pattern; off the diagram the
/// t-values are then strictly positive.
pub fn classify(m: &Matrix) -> CellAssignment {
    let t = cauchon_reduce(m).t_matrix;
    let diagram = if t.is_nonnegative() {
        CauchonDiagram::from_boxes(t.rows(), t.cols(), &t.zero_positions()).ok()
    } else {
        None
    };
    CellAssignment {
        t_matrix: t,
        diagram,
    }
}

/// Inverse sweep: builds the matrix whose reduction yields `t`.
///
/// Only meaningful on cell data, so the input must be a nonnegative Cauchon
/// matrix (zero entries forming a valid diagram, all others positive).
pub fn restore(t: &Matrix) -> Result<Matrix> {
    if !t.is_nonnegative() {
        return Err(Error::Precondition(
            "restoration input must be entrywise nonnegative".into(),
        ));
    }
    CauchonDiagram::from_boxes(t.rows(), t.cols(), &t.zero_positions()).map_err(|_| {
        Error::Precondition("restoration input must have a Cauchon zero pattern".into())
    })?;
    Ok(restore_unchecked(t))
}

fn restore_unchecked(t: &Matrix) -> Matrix {
    let (rows, cols) = t.shape();
    let mut work = t.clone();
    for &r in sweep_positions(rows, cols).iter() {
        let pivot = work.at(r).clone();
        if !pivot.is_zero() {
            apply_step(&mut work, r, &pivot, StepDirection::Restore);
        }
    }
    work
}

/// Representative of the cell of `c`: restores the t-matrix with 1 on white
/// boxes and 0 on black boxes. Classifying the result returns `c`.
pub fn representative(c: &CauchonDiagram) -> Matrix {
    representative_with(c, |_| Rational::one()).expect("ones are positive")
}

/// Representative with caller-chosen positive t-values on the white boxes.
pub fn representative_with<F>(c: &CauchonDiagram, mut white_value: F) -> Result<Matrix>
where
    F: FnMut(GridIndex) -> Rational,
{
    let mut t = Matrix::zero(c.rows(), c.cols());
    for ix in grid_positions_of(c) {
        if c.is_white(ix) {
            let v = white_value(ix);
            if !v.is_positive() {
                return Err(Error::Precondition(format!(
                    "t-value at {ix} must be positive, got {v}"
                )));
            }
            t.set(ix.row, ix.col, v);
        }
    }
    Ok(restore_unchecked(&t))
}

/// Seeded representative with random positive t-values (numerators and
/// denominators up to 9). Reproducible for a fixed seed.
pub fn random_representative(c: &CauchonDiagram, seed: u64) -> Matrix {
    let mut rng = SplitMix64::new(seed);
    representative_with(c, |_| {
        let n = rng.range_inclusive(1, 9) as i64;
        let d = rng.range_inclusive(1, 9) as i64;
        crate::exact::rational(n, d).expect("nonzero denominator")
    })
    .expect("random values are positive")
}

fn grid_positions_of(c: &CauchonDiagram) -> impl Iterator<Item = GridIndex> {
    crate::exact::grid_positions(c.rows(), c.cols())
}

/// For a totally positive matrix, each t-value is a ratio of final minors:
/// `t[i,α]·[i+1..i+r | α+1..α+r](M) = [i..i+r | α..α+r](M)` with
/// `r = min(m−i, p−α)`. Checks the identity exactly, cross-multiplied.
pub fn tp_t_formula_check(m: &Matrix) -> Result<bool> {
    if !crate::minors::gasca_pena_tp_test(m) {
        return Err(Error::Precondition(
            "the t-value formula is only claimed for totally positive matrices".into(),
        ));
    }
    let (rows, cols) = m.shape();
    let t = cauchon_reduce(m).t_matrix;
    for ix in crate::exact::grid_positions(rows, cols) {
        let r = (rows - ix.row).min(cols - ix.col);
        let full = minor(m, &MinorSpec::contiguous(ix.row, ix.col, r + 1))?;
        let trailing = if r == 0 {
            Rational::one()
        } else {
            minor(m, &MinorSpec::contiguous(ix.row + 1, ix.col + 1, r))?
        };
        if t.at(ix) * trailing != full {
            return Ok(false);
        }
    }
    Ok(true)
}
