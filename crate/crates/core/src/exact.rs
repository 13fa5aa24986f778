//! Exact rational scalars, grid positions and the dense matrix type.
//!
//! Everything downstream is decided by exact zero/positive dichotomies, so
//! the scalar type is an arbitrary-precision rational and no operation in
//! the crate ever compares against a tolerance. Grid positions are 1-based
//! throughout the public surface; translation to 0-based storage happens
//! inside [`Matrix`].

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in canonical form
/// (positive denominator, fully reduced).
pub type Rational = num_rational::BigRational;

/// Checked rational constructor: normalizes sign and reduces.
///
/// `rational(4, -6)` is `-2/3`; a zero denominator is rejected.
pub fn rational(numer: i64, denom: i64) -> Result<Rational> {
    rational_from_bigints(BigInt::from(numer), BigInt::from(denom))
}

pub fn rational_from_bigints(numer: BigInt, denom: BigInt) -> Result<Rational> {
    if denom.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(numer, denom))
}

/// Parses `"p/q"`, a decimal string like `"-3.25"`, or an integer string.
///
/// Decimals convert exactly via a power-of-ten denominator; no float ever
/// enters the pipeline.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
        return rational_from_bigints(n, d);
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let (sign, int_digits) = match int_part.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, int_part.strip_prefix('+').unwrap_or(int_part)),
        };
        if !int_digits.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
            || (int_digits.is_empty() && frac_part.is_empty())
        {
            return Err(Error::Parse(format!("bad decimal literal {s:?}")));
        }
        let scale = BigInt::from(10u8).pow(frac_part.len() as u32);
        let int_val: BigInt = if int_digits.is_empty() {
            BigInt::zero()
        } else {
            int_digits.parse().unwrap()
        };
        let frac_val: BigInt = if frac_part.is_empty() {
            BigInt::zero()
        } else {
            frac_part.parse().unwrap()
        };
        let numer = (int_val * &scale + frac_val) * BigInt::from(sign);
        return rational_from_bigints(numer, scale);
    }
    let n: BigInt = s
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer literal {s:?}")))?;
    Ok(Rational::from_integer(n))
}

/// A 1-based grid position `(row, col)`.
///
/// Ordering is lexicographic: first by row, then by column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridIndex {
    pub row: usize,
    pub col: usize,
}

impl GridIndex {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    pub fn in_grid(&self, rows: usize, cols: usize) -> bool {
        (1..=rows).contains(&self.row) && (1..=cols).contains(&self.col)
    }
}

impl std::fmt::Display for GridIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// All positions of an `m×p` grid in row-major (lexicographic) order.
pub fn grid_positions(rows: usize, cols: usize) -> impl Iterator<Item = GridIndex> {
    (1..=rows).flat_map(move |i| (1..=cols).map(move |a| GridIndex::new(i, a)))
}

/// Successor of `r` in the sweep domain.
///
/// The sweep runs over the grid positions minus `(1,1)`, extended by the
/// sentinel `(m+1, p)`. The successor of `r` is the smallest such position
/// lexicographically greater than `r`: `(j, β+1)` within a row, `(j+1, 1)`
/// when wrapping off the end of row `j < m`, and the sentinel after `(m, p)`.
///
/// `r` must lie in the grid and differ from `(1,1)`.
pub fn lex_successor(r: GridIndex, rows: usize, cols: usize) -> Result<GridIndex> {
    if !r.in_grid(rows, cols) || r == GridIndex::new(1, 1) {
        return Err(Error::OutOfRange {
            what: format!("{r} is not a sweep position of a {rows}x{cols} grid"),
        });
    }
    if r.col < cols {
        Ok(GridIndex::new(r.row, r.col + 1))
    } else if r.row < rows {
        Ok(GridIndex::new(r.row + 1, 1))
    } else {
        Ok(GridIndex::new(rows + 1, cols))
    }
}

/// The sweep positions (grid minus `(1,1)`) in ascending lexicographic
/// order, i.e. the orbit of `(1,2)` under [`lex_successor`].
pub fn sweep_positions(rows: usize, cols: usize) -> Vec<GridIndex> {
    grid_positions(rows, cols).skip(1).collect()
}

/// Dense `m×p` matrix of exact rationals, row-major, 1-based access.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Parse("matrix shape must be positive".into()));
        }
        if data.len() != rows * cols {
            return Err(Error::Parse(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let m = rows.len();
        let p = rows.first().map(Vec::len).unwrap_or(0);
        if rows.iter().any(|r| r.len() != p) {
            return Err(Error::Parse("ragged matrix rows".into()));
        }
        Self::new(m, p, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor for integer literals (tests, examples).
    ///
    /// Panics on ragged or empty input.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let m = rows.len();
        assert!(m > 0, "empty matrix");
        let p = rows[0].len();
        assert!(p > 0, "empty matrix row");
        let mut data = Vec::with_capacity(m * p);
        for row in rows {
            assert_eq!(row.len(), p, "ragged matrix rows");
            data.extend(row.iter().map(|&x| Rational::from_integer(x.into())));
        }
        Self {
            rows: m,
            cols: p,
            data,
        }
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

    fn offset(&self, row: usize, col: usize) -> usize {
        assert!(
            (1..=self.rows).contains(&row) && (1..=self.cols).contains(&col),
            "index ({row},{col}) out of range for {}x{} matrix",
            self.rows,
            self.cols
        );
        (row - 1) * self.cols + (col - 1)
    }

    /// Entry at 1-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.data[self.offset(row, col)]
    }

    pub fn at(&self, ix: GridIndex) -> &Rational {
        self.get(ix.row, ix.col)
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, value: Rational) {
        let off = self.offset(row, col);
        self.data[off] = value;
    }

    /// Functional single-entry update; used to perturb representatives.
    pub fn with_entry(&self, ix: GridIndex, value: Rational) -> Self {
        let mut out = self.clone();
        out.set(ix.row, ix.col, value);
        out
    }

    pub fn positions(&self) -> impl Iterator<Item = GridIndex> {
        grid_positions(self.rows, self.cols)
    }

    /// The set of positions whose entry is zero, row-major.
    pub fn zero_positions(&self) -> Vec<GridIndex> {
        self.positions()
            .filter(|ix| self.at(*ix).is_zero())
            .collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|x| !x.is_negative())
    }
}

impl std::fmt::Display for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 1..=self.rows {
            let row: Vec<String> = (1..=self.cols)
                .map(|a| self.get(i, a).to_string())
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Builds a [`Matrix`] from integer row literals: `mat![[2,1],[1,1]]`.
#[macro_export]
macro_rules! mat {
    ($([$($x:expr),* $(,)?]),* $(,)?) => {
        $crate::exact::Matrix::from_int_rows(&[$(&[$($x as i64),*][..]),*])
    };
}
