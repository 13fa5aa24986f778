//! Lacunary sequences: strictly increasing chains of boxes along which the
//! minor of a cell matrix factors into a product of t-values.
//!
//! A sequence `(x_0, …, x_t)` of boxes is lacunary for a diagram when the
//! boxes after the first are white, rows and columns strictly increase,
//! everything strictly south-east of the last box is black, and between
//! consecutive boxes the diagram is black on one of two row bands and one of
//! two column bands (conditions 5 and 6 below). The first box itself may be
//! black or white.

use crate::capacity;
use crate::diagram::CauchonDiagram;
use crate::error::{Error, Result};
use crate::exact::GridIndex;
use crate::minors::MinorSpec;

/// Default cell-count guard for exhaustive sequence search.
const SEARCH_CELL_LIMIT: usize = 25;

/// A lacunary sequence; the row and column sets double as a minor spec.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LacunarySequence {
    points: Vec<GridIndex>,
}

impl LacunarySequence {
    /// Validates the sequence against the diagram.
    pub fn new(c: &CauchonDiagram, points: Vec<GridIndex>) -> Result<Self> {
        if !is_lacunary(c, &points)? {
            return Err(Error::NotLacunary(format!(
                "{} for diagram\n{}",
                format_points(&points),
                c.to_ascii()
            )));
        }
        Ok(Self { points })
    }

    fn from_points(points: Vec<GridIndex>) -> Self {
        Self { points }
    }

    pub fn points(&self) -> &[GridIndex] {
        &self.points
    }

    pub fn start(&self) -> GridIndex {
        self.points[0]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a lacunary sequence has at least one point
    }

    /// The minor on the sequence's rows and columns.
    pub fn minor_spec(&self) -> MinorSpec {
        let rows = self.points.iter().map(|p| p.row).collect();
        let cols = self.points.iter().map(|p| p.col).collect();
        MinorSpec::new(rows, cols).expect("points strictly increase")
    }
}

impl std::fmt::Display for LacunarySequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_points(&self.points))
    }
}

fn format_points(points: &[GridIndex]) -> String {
    let inner: Vec<String> = points.iter().map(ToString::to_string).collect();
    format!("({})", inner.join(", "))
}

/// Checks the six defining conditions directly, as plain quantifier sweeps.
///
/// Out-of-range points are a domain error, not `false`.
pub fn is_lacunary(c: &CauchonDiagram, points: &[GridIndex]) -> Result<bool> {
    let (rows, cols) = c.shape();
    for ix in points {
        if !ix.in_grid(rows, cols) {
            return Err(Error::OutOfRange {
                what: format!("sequence point {ix} in a {rows}x{cols} diagram"),
            });
        }
    }
    // 1: at least one box
    if points.is_empty() {
        return Ok(false);
    }
    // 2: every box after the first is white
    if points[1..].iter().any(|&ix| c.is_black(ix)) {
        return Ok(false);
    }
    // 3: strictly increasing rows and columns
    if points
        .windows(2)
        .any(|w| w[0].row >= w[1].row || w[0].col >= w[1].col)
    {
        return Ok(false);
    }
    let black = |i: usize, a: usize| c.is_black(GridIndex::new(i, a));
    let all_black = |ri: std::ops::Range<usize>, ra: std::ops::Range<usize>| {
        ri.clone().all(|i| ra.clone().all(|a| black(i, a)))
    };
    let last = *points.last().unwrap();
    // 4: everything strictly south-east of the last box is black
    if !all_black(last.row + 1..rows + 1, last.col + 1..cols + 1) {
        return Ok(false);
    }
    let first = points[0];
    for w in points.windows(2) {
        let (cur, next) = (w[0], w[1]);
        // 5: rows strictly between cur and next are black either on all
        //    columns past cur, or on all columns from the start column up
        //    to (not including) next's column
        let cond5 = all_black(cur.row + 1..next.row, cur.col + 1..cols + 1)
            || all_black(cur.row + 1..next.row, first.col..next.col);
        if !cond5 {
            return Ok(false);
        }
        // 6: columns strictly between cur and next are black either on all
        //    rows past cur, or on all rows before next's row
        let cond6 = all_black(cur.row + 1..rows + 1, cur.col + 1..next.col)
            || all_black(1..next.row, cur.col + 1..next.col);
        if !cond6 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Is every box strictly south-east of `(i, a)` black? (Vacuously true when
/// the region is empty.)
fn subgrid_all_black(c: &CauchonDiagram, i: usize, a: usize) -> bool {
    (i + 1..=c.rows()).all(|k| (a + 1..=c.cols()).all(|b| c.is_black(GridIndex::new(k, b))))
}

/// Are the boxes below row `i` in columns `1..=a` all black?
fn below_left_all_black(c: &CauchonDiagram, i: usize, a: usize) -> bool {
    (i + 1..=c.rows()).all(|k| (1..=a).all(|b| c.is_black(GridIndex::new(k, b))))
}

/// Are the boxes in rows `1..=i` past column `a` all black?
fn above_right_all_black(c: &CauchonDiagram, i: usize, a: usize) -> bool {
    (1..=i).all(|k| (a + 1..=c.cols()).all(|b| c.is_black(GridIndex::new(k, b))))
}

/// Constructs a lacunary sequence starting at `start`.
///
/// Greedy walk: while the sub-diagram strictly south-east of the current box
/// is not completely black, the next box is picked by a three-case ladder
/// (checked in this order):
///
/// 1. everything below-left black → first column with a white box below the
///    current row, then the first white box in it;
/// 2. everything above-right black → first row with a white box past the
///    current column, then the first white box in it;
/// 3. otherwise → first column past the current one with a white box in the
///    rows above, then the first white box below the current row in it.
///
/// Each step strictly increases both coordinates, so the walk terminates.
/// The case order matters: it pins down the deterministic output.
pub fn lacunary_from(c: &CauchonDiagram, start: GridIndex) -> Result<LacunarySequence> {
    let (rows, cols) = c.shape();
    if !start.in_grid(rows, cols) {
        return Err(Error::OutOfRange {
            what: format!("start box {start} in a {rows}x{cols} diagram"),
        });
    }
    let white = |i: usize, a: usize| c.is_white(GridIndex::new(i, a));
    let mut points = vec![start];
    let (mut i, mut a) = (start.row, start.col);
    while !subgrid_all_black(c, i, a) {
        let (ni, na) = if below_left_all_black(c, i, a) {
            let col = (1..=cols)
                .find(|&b| (i + 1..=rows).any(|k| white(k, b)))
                .expect("a white box exists below row i");
            let row = (i + 1..=rows)
                .find(|&k| white(k, col))
                .expect("the column was chosen for its white box");
            (row, col)
        } else if above_right_all_black(c, i, a) {
            let row = (1..=rows)
                .find(|&k| (a + 1..=cols).any(|b| white(k, b)))
                .expect("a white box exists past column a");
            let col = (a + 1..=cols)
                .find(|&b| white(row, b))
                .expect("the row was chosen for its white box");
            (row, col)
        } else {
            let col = (a + 1..=cols)
                .find(|&b| (1..=i).any(|s| white(s, b)))
                .expect("above-right is not all black");
            let row = (i + 1..=rows)
                .find(|&k| white(k, col))
                .expect("the Cauchon condition forces a white box below in this column");
            (row, col)
        };
        debug_assert!(ni > i && na > a, "walk must strictly advance");
        points.push(GridIndex::new(ni, na));
        i = ni;
        a = na;
    }
    Ok(LacunarySequence::from_points(points))
}

/// Exhaustive search: every lacunary sequence starting at `start`, in
/// deterministic order. Guarded by the cell limit.
pub fn all_lacunary_from(c: &CauchonDiagram, start: GridIndex) -> Result<Vec<LacunarySequence>> {
    let (rows, cols) = c.shape();
    capacity::check_cells(rows, cols, SEARCH_CELL_LIMIT)?;
    if !start.in_grid(rows, cols) {
        return Err(Error::OutOfRange {
            what: format!("start box {start} in a {rows}x{cols} diagram"),
        });
    }
    let mut out = Vec::new();
    let mut chain = vec![start];
    search_chains(c, &mut chain, &mut out)?;
    Ok(out)
}

fn search_chains(
    c: &CauchonDiagram,
    chain: &mut Vec<GridIndex>,
    out: &mut Vec<LacunarySequence>,
) -> Result<()> {
    if is_lacunary(c, chain)? {
        out.push(LacunarySequence::from_points(chain.clone()));
    }
    let last = *chain.last().unwrap();
    for i in last.row + 1..=c.rows() {
        for a in last.col + 1..=c.cols() {
            let ix = GridIndex::new(i, a);
            if c.is_white(ix) {
                chain.push(ix);
                search_chains(c, chain, out)?;
                chain.pop();
            }
        }
    }
    Ok(())
}
