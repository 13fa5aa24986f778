//! Cauchon diagrams: black/white grids where every black box has either its
//! entire strict-left row segment black or its entire strict-above column
//! segment black. These diagrams parametrise the nonempty totally
//! nonnegative cells.

use crate::capacity;
use crate::error::{Error, Result};
use crate::exact::{grid_positions, GridIndex};
use crate::minors::determinant;
use crate::reduction::representative;
use crate::rng::SplitMix64;
use num_traits::Zero;

/// Default cell-count guard for exhaustive enumeration.
const ENUMERATION_CELL_LIMIT: usize = 30;

/// Validated `m×p` black/white grid satisfying the Cauchon condition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CauchonDiagram {
    rows: usize,
    cols: usize,
    black: Vec<bool>, // row-major
}

/// Does the black-box set satisfy the Cauchon condition?
///
/// Out-of-range boxes are a domain error, not `false`.
pub fn is_cauchon(rows: usize, cols: usize, black: &[GridIndex]) -> Result<bool> {
    let mut grid = vec![false; rows * cols];
    for ix in black {
        if !ix.in_grid(rows, cols) {
            return Err(Error::OutOfRange {
                what: format!("box {ix} in a {rows}x{cols} diagram"),
            });
        }
        grid[(ix.row - 1) * cols + (ix.col - 1)] = true;
    }
    Ok(grid_is_cauchon(rows, cols, &grid))
}

fn grid_is_cauchon(rows: usize, cols: usize, black: &[bool]) -> bool {
    let at = |i: usize, a: usize| black[(i - 1) * cols + (a - 1)];
    for i in 1..=rows {
        for a in 1..=cols {
            if !at(i, a) {
                continue;
            }
            let left_black = (1..a).all(|b| at(i, b));
            let above_black = (1..i).all(|k| at(k, a));
            if !left_black && !above_black {
                return false;
            }
        }
    }
    true
}

impl CauchonDiagram {
    /// Builds a diagram from its black-box set, rejecting invalid ones.
    pub fn from_boxes(rows: usize, cols: usize, black: &[GridIndex]) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Parse("diagram shape must be positive".into()));
        }
        if !is_cauchon(rows, cols, black)? {
            return Err(Error::NotCauchon);
        }
        let mut grid = vec![false; rows * cols];
        for ix in black {
            grid[(ix.row - 1) * cols + (ix.col - 1)] = true;
        }
        Ok(Self {
            rows,
            cols,
            black: grid,
        })
    }

    pub(crate) fn from_grid(rows: usize, cols: usize, black: Vec<bool>) -> Result<Self> {
        debug_assert_eq!(black.len(), rows * cols);
        if !grid_is_cauchon(rows, cols, &black) {
            return Err(Error::NotCauchon);
        }
        Ok(Self { rows, cols, black })
    }

    pub fn all_white(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            black: vec![false; rows * cols],
        }
    }

    pub fn all_black(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            black: vec![true; rows * cols],
        }
    }

    /// Parses the ASCII grid format: one line per row, `#` black, `.` white.
    pub fn parse_ascii(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        if lines.is_empty() {
            return Err(Error::Parse("empty diagram".into()));
        }
        let cols = lines[0].trim().len();
        let rows = lines.len();
        let mut black = Vec::with_capacity(rows * cols);
        for line in &lines {
            let line = line.trim();
            if line.len() != cols {
                return Err(Error::Parse("ragged diagram rows".into()));
            }
            for ch in line.chars() {
                match ch {
                    '#' => black.push(true),
                    '.' => black.push(false),
                    other => {
                        return Err(Error::Parse(format!(
                            "diagram character {other:?} (expected '#' or '.')"
                        )))
                    }
                }
            }
        }
        Self::from_grid(rows, cols, black)
    }

    /// Renders the ASCII grid format, newline-terminated.
    pub fn to_ascii(&self) -> String {
        let mut out = String::with_capacity((self.cols + 1) * self.rows);
        for i in 1..=self.rows {
            for a in 1..=self.cols {
                out.push(if self.is_black(GridIndex::new(i, a)) {
                    '#'
                } else {
                    '.'
                });
            }
            out.push('\n');
        }
        out
    }

    pub fn ascii_lines(&self) -> Vec<String> {
        self.to_ascii().lines().map(str::to_owned).collect()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Is the box black? 1-based; panics out of range.
    pub fn is_black(&self, ix: GridIndex) -> bool {
        assert!(ix.in_grid(self.rows, self.cols), "box {ix} out of range");
        self.black[(ix.row - 1) * self.cols + (ix.col - 1)]
    }

    pub fn is_white(&self, ix: GridIndex) -> bool {
        !self.is_black(ix)
    }

    pub fn black_boxes(&self) -> Vec<GridIndex> {
        grid_positions(self.rows, self.cols)
            .filter(|ix| self.is_black(*ix))
            .collect()
    }

    /// Row-major big-endian bit string, `1` = black. Stable census key.
    pub fn fingerprint(&self) -> String {
        self.black
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }

    /// Samples a valid diagram by walking the grid row-major and colouring a
    /// box black with the given odds whenever the condition allows it.
    /// Deterministic in the RNG stream; not uniform over diagrams.
    pub fn random(rows: usize, cols: usize, rng: &mut SplitMix64) -> Self {
        let mut black = vec![false; rows * cols];
        for i in 0..rows {
            for a in 0..cols {
                let left_black = (0..a).all(|b| black[i * cols + b]);
                let above_black = (0..i).all(|k| black[k * cols + a]);
                if (left_black || above_black) && rng.chance(2, 5) {
                    black[i * cols + a] = true;
                }
            }
        }
        Self { rows, cols, black }
    }
}

impl std::fmt::Display for CauchonDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

/// Walks every `m×p` Cauchon diagram exactly once in ascending fingerprint
/// order, pruning invalid colourings as soon as they arise.
fn visit_diagrams<F: FnMut(&CauchonDiagram)>(rows: usize, cols: usize, f: &mut F) {
    // `col_black[a]` = every box above the current row in column a is black;
    // `row_black` = every box to the left in the current row is black.
    struct Walker<'a, F> {
        rows: usize,
        cols: usize,
        grid: Vec<bool>,
        emit: &'a mut F,
    }

    impl<F: FnMut(&CauchonDiagram)> Walker<'_, F> {
        fn cell(&mut self, i: usize, a: usize, col_black: &[bool], row_black: bool) {
            if i == self.rows {
                self.emit_current();
                return;
            }
            if a == self.cols {
                let mut next_cols = col_black.to_vec();
                for (c, flag) in next_cols.iter_mut().enumerate() {
                    *flag &= self.grid[i * self.cols + c];
                }
                self.cell(i + 1, 0, &next_cols, true);
                return;
            }
            self.grid.push(false);
            self.cell(i, a + 1, col_black, false);
            self.grid.pop();
            if row_black || col_black[a] {
                self.grid.push(true);
                self.cell(i, a + 1, col_black, row_black);
                self.grid.pop();
            }
        }

        fn emit_current(&mut self) {
            let d = CauchonDiagram {
                rows: self.rows,
                cols: self.cols,
                black: self.grid.clone(),
            };
            (self.emit)(&d);
        }
    }

    let mut walker = Walker {
        rows,
        cols,
        grid: Vec::with_capacity(rows * cols),
        emit: f,
    };
    let col_black = vec![true; cols];
    walker.cell(0, 0, &col_black, true);
}

/// All `m×p` Cauchon diagrams in deterministic (fingerprint) order.
///
/// Guarded by the cell limit; see [`census`] for a streaming alternative.
pub fn enumerate_diagrams(rows: usize, cols: usize) -> Result<Vec<CauchonDiagram>> {
    capacity::check_cells(rows, cols, ENUMERATION_CELL_LIMIT)?;
    let mut out = Vec::new();
    visit_diagrams(rows, cols, &mut |d| out.push(d.clone()));
    Ok(out)
}

/// Census statistics over all diagrams of a shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramCensus {
    pub rows: usize,
    pub cols: usize,
    /// Number of diagrams = number of nonempty tnn cells.
    pub total: u64,
    /// Square shapes only: number of cells on which the determinant
    /// vanishes, computed from one exact representative per cell.
    pub det_vanishing: Option<u64>,
    /// Per-diagram detail `(fingerprint, determinant vanishes)`.
    pub per_diagram: Option<Vec<(String, bool)>>,
}

/// Counts diagrams; with `det_stats` (square shapes only) also counts the
/// cells whose representative has determinant zero. The vanishing pattern
/// is constant on a cell, so one representative decides it.
pub fn census(
    rows: usize,
    cols: usize,
    det_stats: bool,
    per_diagram: bool,
) -> Result<DiagramCensus> {
    capacity::check_cells(rows, cols, ENUMERATION_CELL_LIMIT)?;
    if det_stats && rows != cols {
        return Err(Error::Precondition(
            "determinant statistics need a square shape".into(),
        ));
    }
    let mut total = 0u64;
    let mut vanishing = 0u64;
    let mut detail: Vec<(String, bool)> = Vec::new();
    visit_diagrams(rows, cols, &mut |d| {
        total += 1;
        if det_stats {
            let rep = representative(d);
            let det_zero = determinant(&rep).expect("square by guard").is_zero();
            if det_zero {
                vanishing += 1;
            }
            if per_diagram {
                detail.push((d.fingerprint(), det_zero));
            }
        } else if per_diagram {
            detail.push((d.fingerprint(), false));
        }
    });
    Ok(DiagramCensus {
        rows,
        cols,
        total,
        det_vanishing: det_stats.then_some(vanishing),
        per_diagram: per_diagram.then_some(detail),
    })
}

/// Checks the lower bound: strictly more diagrams than `m^p`.
pub fn diagram_complement_count_check(rows: usize, cols: usize) -> Result<bool> {
    let total = census(rows, cols, false, false)?.total as u128;
    let bound = (rows as u128).pow(cols as u32);
    Ok(total > bound)
}
