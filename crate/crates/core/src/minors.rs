//! Exact minor evaluation and the initial/final minor machinery.
//!
//! A minor `[I|J]` is the determinant of the submatrix on row set `I` and
//! column set `J`. Evaluation clears denominators row by row and runs
//! fraction-free Bareiss elimination over big integers; a cofactor-expansion
//! determinant is kept as an independent oracle for small sizes.

use std::cell::Cell;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{grid_positions, Matrix, Rational};

thread_local! {
    static DET_EVALS: Cell<u64> = const { Cell::new(0) };
}

/// Number of minor evaluations performed by this thread since the last
/// [`reset_det_evaluations`]. Instrumentation for comparing the `m·p`-minor
/// membership test against the all-minors sweep.
pub fn det_evaluations() -> u64 {
    DET_EVALS.with(|c| c.get())
}

pub fn reset_det_evaluations() {
    DET_EVALS.with(|c| c.set(0));
}

/// Row and column set of a minor, both strictly increasing and of equal size.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MinorSpec {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl MinorSpec {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        if rows.is_empty() || rows.len() != cols.len() {
            return Err(Error::BadSpec(format!(
                "row set size {} and column set size {} must be equal and nonzero",
                rows.len(),
                cols.len()
            )));
        }
        for set in [&rows, &cols] {
            if set[0] == 0 || !set.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::BadSpec(
                    "index sets must be strictly increasing and 1-based".into(),
                ));
            }
        }
        Ok(Self { rows, cols })
    }

    /// `[i..i+size-1 | a..a+size-1]`.
    pub fn contiguous(row_start: usize, col_start: usize, size: usize) -> Self {
        Self {
            rows: (row_start..row_start + size).collect(),
            cols: (col_start..col_start + size).collect(),
        }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn fits(&self, rows: usize, cols: usize) -> bool {
        *self.rows.last().unwrap() <= rows && *self.cols.last().unwrap() <= cols
    }

    /// Parses `"1,3|1,2"`.
    pub fn parse(s: &str) -> Result<Self> {
        let (r, c) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("minor spec {s:?} missing '|'")))?;
        let parse_set = |part: &str| -> Result<Vec<usize>> {
            part.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad index {tok:?} in minor spec")))
                })
                .collect()
        };
        Self::new(parse_set(r)?, parse_set(c)?)
    }
}

impl std::fmt::Display for MinorSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "[{}|{}]", join(&self.rows), join(&self.cols))
    }
}

/// Exact value of the minor `[I|J](M)`.
pub fn minor(m: &Matrix, spec: &MinorSpec) -> Result<Rational> {
    if !spec.fits(m.rows(), m.cols()) {
        return Err(Error::OutOfRange {
            what: format!("minor {spec} on a {}x{} matrix", m.rows(), m.cols()),
        });
    }
    DET_EVALS.with(|c| c.set(c.get() + 1));
    let sub: Vec<Vec<Rational>> = spec
        .rows
        .iter()
        .map(|&i| spec.cols.iter().map(|&a| m.get(i, a).clone()).collect())
        .collect();
    Ok(det_bareiss(sub))
}

/// Full determinant of a square matrix.
pub fn determinant(m: &Matrix) -> Result<Rational> {
    if m.rows() != m.cols() {
        return Err(Error::ShapeMismatch {
            expected: (m.rows(), m.rows()),
            found: (m.rows(), m.cols()),
        });
    }
    minor(m, &MinorSpec::contiguous(1, 1, m.rows()))
}

/// Fraction-free elimination after clearing denominators row by row.
fn det_bareiss(rows: Vec<Vec<Rational>>) -> Rational {
    let n = rows.len();
    let mut denom = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in rows {
        let scale = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        a.push(
            row.iter()
                .map(|x| x.numer() * (&scale / x.denom()))
                .collect(),
        );
        denom *= scale;
    }
    let det = int_det_bareiss(a, n);
    Rational::new(det, denom)
}

fn int_det_bareiss(mut a: Vec<Vec<BigInt>>, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                debug_assert!((&num % &prev).is_zero());
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Cofactor-expansion determinant, independent of the Bareiss path.
///
/// Factorial cost; guarded to submatrices of size at most 5.
pub fn minor_cofactor(m: &Matrix, spec: &MinorSpec) -> Result<Rational> {
    if !spec.fits(m.rows(), m.cols()) {
        return Err(Error::OutOfRange {
            what: format!("minor {spec} on a {}x{} matrix", m.rows(), m.cols()),
        });
    }
    if spec.size() > 5 {
        return Err(Error::Precondition(
            "cofactor oracle is limited to minors of size 5".into(),
        ));
    }
    let sub: Vec<Vec<Rational>> = spec
        .rows
        .iter()
        .map(|&i| spec.cols.iter().map(|&a| m.get(i, a).clone()).collect())
        .collect();
    Ok(det_cofactor(&sub))
}

fn det_cofactor(a: &[Vec<Rational>]) -> Rational {
    let n = a.len();
    if n == 1 {
        return a[0][0].clone();
    }
    let mut acc = Rational::zero();
    for (j, pivot) in a[0].iter().enumerate() {
        if pivot.is_zero() {
            continue;
        }
        let rest: Vec<Vec<Rational>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = pivot * det_cofactor(&rest);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=k).collect();
    if k == 0 || k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        // advance to the next k-subset of 1..=n in lexicographic order
        let mut i = k;
        while i > 0 && cur[i - 1] == n - (k - i) {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

/// Every minor spec of an `m×p` matrix, size-major then lexicographic.
///
/// For a square matrix there are `C(2m, m) − 1` of them.
pub fn all_minor_specs(rows: usize, cols: usize) -> Vec<MinorSpec> {
    let mut out = Vec::new();
    for k in 1..=rows.min(cols) {
        for r in combinations(rows, k) {
            for c in combinations(cols, k) {
                out.push(MinorSpec {
                    rows: r.clone(),
                    cols: c,
                });
            }
        }
    }
    out
}

/// The `m·p` final minors: consecutive row and column sets with the last row
/// or the last column included; one per top-left corner, row-major.
pub fn final_minor_specs(rows: usize, cols: usize) -> Vec<MinorSpec> {
    grid_positions(rows, cols)
        .map(|ix| {
            let r = (rows - ix.row).min(cols - ix.col);
            MinorSpec::contiguous(ix.row, ix.col, r + 1)
        })
        .collect()
}

/// The `m·p` initial minors: consecutive row and column sets containing row 1
/// or column 1; one per bottom-right corner, row-major.
pub fn initial_minor_specs(rows: usize, cols: usize) -> Vec<MinorSpec> {
    grid_positions(rows, cols)
        .map(|ix| {
            let r = ix.row.min(ix.col) - 1;
            MinorSpec::contiguous(ix.row - r, ix.col - r, r + 1)
        })
        .collect()
}

/// Antidiagonal reflection: the `p×m` matrix with `(i,j)` entry
/// `m[m+1-j, p+1-i]`. Applying it twice returns the original matrix.
pub fn antidiagonal_reflect(m: &Matrix) -> Matrix {
    let (rows, cols) = m.shape();
    let mut out = Matrix::zero(cols, rows);
    for i in 1..=cols {
        for j in 1..=rows {
            out.set(i, j, m.get(rows + 1 - j, cols + 1 - i).clone());
        }
    }
    out
}

/// The spec with the same value on the antidiagonal reflection:
/// `[I|J](A) = [conjugate](A^ρ)` for a spec `[I|J]` of an `rows×cols`
/// matrix `A`.
pub fn conjugate_spec(spec: &MinorSpec, rows: usize, cols: usize) -> MinorSpec {
    let mut r: Vec<usize> = spec.cols.iter().map(|&j| cols + 1 - j).collect();
    let mut c: Vec<usize> = spec.rows.iter().map(|&i| rows + 1 - i).collect();
    r.reverse();
    c.reverse();
    MinorSpec { rows: r, cols: c }
}

/// Total-positivity test via final minors: `M` is totally positive if and
/// only if each of its `m·p` final minors is strictly positive.
pub fn gasca_pena_tp_test(m: &Matrix) -> bool {
    final_minor_specs(m.rows(), m.cols()).iter().all(|s| {
        minor(m, s)
            .expect("final specs fit the matrix")
            .is_positive()
    })
}
