//! Wire formats: matrix files, scheme files, membership reports and
//! classification output, all JSON; diagrams travel as ASCII grids.
//!
//! Matrix entries may be JSON integers, rational strings `"p/q"`, or decimal
//! strings like `"1.25"` (converted exactly via powers of ten). Non-integer
//! JSON numbers are rejected: binary floats never enter the pipeline.

use serde::{Deserialize, Serialize};

use crate::diagram::CauchonDiagram;
use crate::error::{Error, Result};
use crate::exact::{parse_rational, GridIndex, Matrix, Rational};
use crate::recognition::{CellMinorScheme, MembershipReport};
use crate::reduction::CellAssignment;

#[derive(Serialize, Deserialize)]
struct MatrixFile {
    rows: usize,
    cols: usize,
    data: Vec<Vec<serde_json::Value>>,
}

fn entry_from_value(v: &serde_json::Value) -> Result<Rational> {
    match v {
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else {
                Err(Error::Parse(format!(
                    "matrix entry {n} is not an integer; write decimals and \
                     rationals as strings, e.g. \"0.5\" or \"1/2\""
                )))
            }
        }
        serde_json::Value::String(s) => parse_rational(s),
        other => Err(Error::Parse(format!(
            "matrix entry {other} must be a number or string"
        ))),
    }
}

fn entry_to_value(r: &Rational) -> serde_json::Value {
    use num_traits::One;
    if r.denom().is_one() {
        if let Ok(i) = i64::try_from(r.numer().clone()) {
            return serde_json::Value::from(i);
        }
    }
    serde_json::Value::from(r.to_string())
}

/// Parses the matrix file format
/// `{"rows": m, "cols": p, "data": [[entry, ...], ...]}`.
pub fn matrix_from_json(text: &str) -> Result<Matrix> {
    let file: MatrixFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix file: {e}")))?;
    if file.data.len() != file.rows || file.data.iter().any(|r| r.len() != file.cols) {
        return Err(Error::Parse(format!(
            "data dimensions do not match rows={} cols={}",
            file.rows, file.cols
        )));
    }
    let mut entries = Vec::with_capacity(file.rows * file.cols);
    for row in &file.data {
        for v in row {
            entries.push(entry_from_value(v)?);
        }
    }
    Matrix::new(file.rows, file.cols, entries)
}

/// Renders the matrix file format. Integer entries come out as JSON numbers,
/// everything else as exact rational strings.
pub fn matrix_to_json(m: &Matrix) -> String {
    let data: Vec<Vec<serde_json::Value>> = (1..=m.rows())
        .map(|i| {
            (1..=m.cols())
                .map(|a| entry_to_value(m.get(i, a)))
                .collect()
        })
        .collect();
    serde_json::to_string(&MatrixFile {
        rows: m.rows(),
        cols: m.cols(),
        data,
    })
    .expect("matrix file serializes")
}

#[derive(Serialize, Deserialize)]
struct SchemeFile {
    diagram: Vec<String>,
    boxes: Vec<SchemeFileBox>,
}

#[derive(Serialize, Deserialize)]
struct SchemeFileBox {
    #[serde(rename = "box")]
    position: [usize; 2],
    sequence: Vec<[usize; 2]>,
}

/// Renders a scheme file:
/// `{"diagram": [<ascii lines>], "boxes": [{"box": [j,β], "sequence": [[i,α], ...]}, ...]}`.
pub fn scheme_to_json(scheme: &CellMinorScheme) -> String {
    let boxes = scheme
        .entries()
        .iter()
        .map(|e| SchemeFileBox {
            position: [e.position.row, e.position.col],
            sequence: e.sequence.points().iter().map(|p| [p.row, p.col]).collect(),
        })
        .collect();
    serde_json::to_string(&SchemeFile {
        diagram: scheme.diagram().ascii_lines(),
        boxes,
    })
    .expect("scheme file serializes")
}

/// Parses and fully validates a scheme file: the diagram must be a Cauchon
/// diagram, every box covered once, every sequence lacunary and anchored at
/// its box.
pub fn scheme_from_json(text: &str) -> Result<CellMinorScheme> {
    let file: SchemeFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("scheme file: {e}")))?;
    let diagram = CauchonDiagram::parse_ascii(&file.diagram.join("\n"))?;
    let sequences = file
        .boxes
        .into_iter()
        .map(|b| {
            let position = GridIndex::new(b.position[0], b.position[1]);
            let points = b
                .sequence
                .iter()
                .map(|&[i, a]| GridIndex::new(i, a))
                .collect();
            (position, points)
        })
        .collect();
    CellMinorScheme::with_sequences(diagram, sequences)
}

#[derive(Serialize)]
struct ReportFile {
    verdict: bool,
    boxes: Vec<ReportBox>,
}

#[derive(Serialize)]
struct ReportBox {
    #[serde(rename = "box")]
    position: [usize; 2],
    rows: Vec<usize>,
    cols: Vec<usize>,
    value: String,
    expected: &'static str,
    pass: bool,
}

/// Renders a membership report with exact rational values as strings.
pub fn report_to_json(report: &MembershipReport) -> String {
    let boxes = report
        .boxes
        .iter()
        .map(|b| ReportBox {
            position: [b.position.row, b.position.col],
            rows: b.spec.rows().to_vec(),
            cols: b.spec.cols().to_vec(),
            value: b.value.to_string(),
            expected: b.expected.as_str(),
            pass: b.pass,
        })
        .collect();
    serde_json::to_string(&ReportFile {
        verdict: report.verdict,
        boxes,
    })
    .expect("report serializes")
}

#[derive(Serialize)]
struct ClassificationFile {
    tnn: bool,
    diagram: Option<Vec<String>>,
    #[serde(rename = "tMatrix")]
    t_matrix: Vec<Vec<String>>,
}

/// Renders a classification:
/// `{"tnn": bool, "diagram": [<ascii lines>] | null, "tMatrix": [["p/q", ...], ...]}`.
pub fn classification_to_json(cell: &CellAssignment) -> String {
    let t = &cell.t_matrix;
    let t_matrix = (1..=t.rows())
        .map(|i| (1..=t.cols()).map(|a| t.get(i, a).to_string()).collect())
        .collect();
    serde_json::to_string(&ClassificationFile {
        tnn: cell.is_tnn(),
        diagram: cell.diagram.as_ref().map(|d| d.ascii_lines()),
        t_matrix,
    })
    .expect("classification serializes")
}
