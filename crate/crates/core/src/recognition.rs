//! Cell membership with `m·p` minors.
//!
//! For a diagram `C`, fix one lacunary sequence per box and take the minor
//! on its rows and columns. A matrix lies in the tnn cell of `C` exactly
//! when each of these minors is zero on a black box and strictly positive
//! on a white box — `m·p` sign conditions in place of the full
//! `C(m+p,m) − 1` minor sweep. Any per-box choice of lacunary sequence
//! works; the default is the constructive algorithm's output.

use num_traits::{One, Signed, Zero};

use crate::diagram::CauchonDiagram;
use crate::error::{Error, Result};
use crate::exact::{grid_positions, GridIndex, Matrix, Rational};
use crate::lacunary::{is_lacunary, lacunary_from, LacunarySequence};
use crate::minors::{minor, MinorSpec};
use crate::reduction::classify;

/// One box of a scheme: the chosen sequence and its minor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeEntry {
    pub position: GridIndex,
    pub sequence: LacunarySequence,
    pub spec: MinorSpec,
}

/// A cell's recognition scheme: one lacunary minor per box, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellMinorScheme {
    diagram: CauchonDiagram,
    entries: Vec<SchemeEntry>,
}

impl CellMinorScheme {
    pub fn diagram(&self) -> &CauchonDiagram {
        &self.diagram
    }

    pub fn entries(&self) -> &[SchemeEntry] {
        &self.entries
    }

    pub fn entry(&self, position: GridIndex) -> Option<&SchemeEntry> {
        self.entries.iter().find(|e| e.position == position)
    }

    /// Builds a scheme from explicit per-box sequences. Every box must be
    /// covered exactly once, each sequence must start at its box and be
    /// lacunary for the diagram.
    pub fn with_sequences(
        diagram: CauchonDiagram,
        sequences: Vec<(GridIndex, Vec<GridIndex>)>,
    ) -> Result<Self> {
        let (rows, cols) = diagram.shape();
        if sequences.len() != rows * cols {
            return Err(Error::Parse(format!(
                "scheme must cover all {} boxes, found {}",
                rows * cols,
                sequences.len()
            )));
        }
        let mut by_box = std::collections::BTreeMap::new();
        for (position, points) in sequences {
            if points.first() != Some(&position) {
                return Err(Error::NotLacunary(format!(
                    "sequence for box {position} does not start there"
                )));
            }
            if !is_lacunary(&diagram, &points)? {
                return Err(Error::NotLacunary(format!("sequence for box {position}")));
            }
            if by_box.insert(position, points).is_some() {
                return Err(Error::Parse(format!("box {position} listed twice")));
            }
        }
        let entries = grid_positions(rows, cols)
            .map(|position| {
                let points = by_box
                    .remove(&position)
                    .ok_or_else(|| Error::Parse(format!("box {position} missing from scheme")))?;
                let sequence = LacunarySequence::new(&diagram, points)?;
                let spec = sequence.minor_spec();
                Ok(SchemeEntry {
                    position,
                    sequence,
                    spec,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { diagram, entries })
    }
}

/// The default scheme: the constructive algorithm's sequence for every box.
pub fn build_scheme(c: &CauchonDiagram) -> CellMinorScheme {
    let entries = grid_positions(c.rows(), c.cols())
        .map(|position| {
            let sequence = lacunary_from(c, position).expect("box is in range");
            let spec = sequence.minor_spec();
            SchemeEntry {
                position,
                sequence,
                spec,
            }
        })
        .collect();
    CellMinorScheme {
        diagram: c.clone(),
        entries,
    }
}

/// Sign a scheme minor must have for membership.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpectedSign {
    Zero,
    Positive,
}

impl ExpectedSign {
    pub fn as_str(self) -> &'static str {
        match self {
            ExpectedSign::Zero => "zero",
            ExpectedSign::Positive => "positive",
        }
    }

    fn matches(self, value: &Rational) -> bool {
        match self {
            ExpectedSign::Zero => value.is_zero(),
            ExpectedSign::Positive => value.is_positive(),
        }
    }
}

/// Evaluation of one scheme minor against a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxOutcome {
    pub position: GridIndex,
    pub spec: MinorSpec,
    pub value: Rational,
    pub expected: ExpectedSign,
    pub pass: bool,
}

/// Result of the `m·p`-minor membership test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipReport {
    /// True exactly when the matrix is tnn and lies in the scheme's cell.
    pub verdict: bool,
    pub boxes: Vec<BoxOutcome>,
}

impl MembershipReport {
    pub fn failures(&self) -> impl Iterator<Item = &BoxOutcome> {
        self.boxes.iter().filter(|b| !b.pass)
    }
}

/// Evaluates the scheme's `m·p` minors on `m` and checks the sign pattern:
/// zero on black boxes, strictly positive on white ones. The verdict is
/// equivalent to "`m` is totally nonnegative and lies in the cell".
pub fn membership_test(m: &Matrix, scheme: &CellMinorScheme) -> Result<MembershipReport> {
    if m.shape() != scheme.diagram.shape() {
        return Err(Error::ShapeMismatch {
            expected: scheme.diagram.shape(),
            found: m.shape(),
        });
    }
    let mut boxes = Vec::with_capacity(scheme.entries.len());
    let mut verdict = true;
    for entry in &scheme.entries {
        let value = minor(m, &entry.spec)?;
        let expected = if scheme.diagram.is_black(entry.position) {
            ExpectedSign::Zero
        } else {
            ExpectedSign::Positive
        };
        let pass = expected.matches(&value);
        verdict &= pass;
        boxes.push(BoxOutcome {
            position: entry.position,
            spec: entry.spec.clone(),
            value,
            expected,
            pass,
        });
    }
    Ok(MembershipReport { verdict, boxes })
}

/// Checks the factorisation of a lacunary minor into t-values:
/// `[rows|cols](M) = t[x_0]·t[x_1]···t[x_t]` along the sequence.
///
/// The identity is only claimed when (a) `M` is tnn and lies in the cell of
/// `c`, or (b) the scheme sign pattern holds for `M`; anything else is a
/// precondition error.
pub fn product_identity_check(
    m: &Matrix,
    c: &CauchonDiagram,
    seq: &LacunarySequence,
) -> Result<bool> {
    if m.shape() != c.shape() {
        return Err(Error::ShapeMismatch {
            expected: c.shape(),
            found: m.shape(),
        });
    }
    if !is_lacunary(c, seq.points())? {
        return Err(Error::NotLacunary(format!("{seq}")));
    }
    let assignment = classify(m);
    let hypothesis_a = assignment.diagram.as_ref() == Some(c);
    let hypothesis_b = hypothesis_a || membership_test(m, &build_scheme(c))?.verdict;
    if !hypothesis_b {
        return Err(Error::Precondition(
            "matrix is neither in the cell nor sign-compatible with its scheme".into(),
        ));
    }
    let lhs = minor(m, &seq.minor_spec())?;
    let mut rhs = Rational::one();
    for &p in seq.points() {
        rhs *= assignment.t_matrix.at(p);
    }
    Ok(lhs == rhs)
}

/// Cell lookup with a built-in cross-check: classifies via reduction, then
/// confirms via the `m·p`-minor membership test. The two routes are
/// logically equivalent, so a disagreement is reported as an internal
/// error — it can only mean a bug.
pub fn cell_of(m: &Matrix) -> Result<Option<CauchonDiagram>> {
    let assignment = classify(m);
    let Some(diagram) = assignment.diagram else {
        return Ok(None);
    };
    let report = membership_test(m, &build_scheme(&diagram))?;
    if !report.verdict {
        return Err(Error::Internal(format!(
            "reduction assigns the cell\n{}but its minor scheme rejects the matrix",
            diagram.to_ascii()
        )));
    }
    Ok(Some(diagram))
}
