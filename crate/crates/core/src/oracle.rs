//! Brute-force ground truth: sweeps every minor of a matrix.
//!
//! Exponentially many minors (`C(m+p, m) − 1`), so everything here is
//! capacity-guarded and exists to validate the fast paths, not to be fast.

use num_traits::Signed;

use crate::capacity;
use crate::error::Result;
use crate::exact::Matrix;
use crate::minors::{all_minor_specs, minor, MinorSpec};

/// The set of vanishing minors of a matrix, in canonical spec order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroPattern {
    pub rows: usize,
    pub cols: usize,
    /// Specs whose minor is exactly zero, ordered as in [`all_minor_specs`].
    pub vanishing: Vec<MinorSpec>,
    /// Number of minors swept (`C(m+p, m) − 1`).
    pub total_minors: usize,
}

impl ZeroPattern {
    pub fn contains(&self, spec: &MinorSpec) -> bool {
        self.vanishing.contains(spec)
    }
}

/// Every minor nonnegative?
pub fn is_tnn_bruteforce(m: &Matrix) -> Result<bool> {
    capacity::check_oracle(m.rows(), m.cols())?;
    for spec in all_minor_specs(m.rows(), m.cols()) {
        if minor(m, &spec)?.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every minor strictly positive?
pub fn is_tp_bruteforce(m: &Matrix) -> Result<bool> {
    capacity::check_oracle(m.rows(), m.cols())?;
    for spec in all_minor_specs(m.rows(), m.cols()) {
        if !minor(m, &spec)?.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact vanishing set over all minors.
pub fn zero_pattern(m: &Matrix) -> Result<ZeroPattern> {
    use num_traits::Zero;
    capacity::check_oracle(m.rows(), m.cols())?;
    let specs = all_minor_specs(m.rows(), m.cols());
    let total_minors = specs.len();
    let mut vanishing = Vec::new();
    for spec in specs {
        if minor(m, &spec)?.is_zero() {
            vanishing.push(spec);
        }
    }
    Ok(ZeroPattern {
        rows: m.rows(),
        cols: m.cols(),
        vanishing,
        total_minors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{enumerate_diagrams, CauchonDiagram};
    use crate::error::Error;
    use crate::mat;
    use crate::reduction::{random_representative, representative, restore};

    #[test]
    fn worked_example_is_tnn_but_not_tp() {
        let m = mat![[16, 5, 0], [12, 6, 3], [4, 2, 1]];
        assert!(is_tnn_bruteforce(&m).unwrap());
        assert!(!is_tp_bruteforce(&m).unwrap());
    }

    #[test]
    fn antidiagonal_swap_is_not_tnn() {
        assert!(!is_tnn_bruteforce(&mat![[0, 1], [1, 0]]).unwrap());
    }

    #[test]
    fn zero_matrix_is_tnn() {
        assert!(is_tnn_bruteforce(&Matrix::zero(3, 2)).unwrap());
        assert!(!is_tp_bruteforce(&Matrix::zero(2, 2)).unwrap());
    }

    #[test]
    fn tp_examples() {
        assert!(is_tp_bruteforce(&mat![[2, 1], [1, 1]]).unwrap());
        assert!(!is_tp_bruteforce(&mat![[1, 1], [1, 1]]).unwrap());
        let tp = restore(&mat![[1, 1, 1], [1, 1, 1], [1, 1, 1]]).unwrap();
        assert!(is_tp_bruteforce(&tp).unwrap());
        assert!(crate::minors::gasca_pena_tp_test(&tp));
    }

    #[test]
    fn tp_implies_tnn_on_samples() {
        for seed in 0..20u64 {
            let c = CauchonDiagram::all_white(3, 3);
            let m = random_representative(&c, seed);
            assert!(is_tp_bruteforce(&m).unwrap());
            assert!(is_tnn_bruteforce(&m).unwrap());
        }
    }

    #[test]
    fn zero_pattern_of_identity() {
        let z = zero_pattern(&mat![[1, 0], [0, 1]]).unwrap();
        assert_eq!(z.total_minors, 5);
        assert_eq!(
            z.vanishing,
            vec![
                MinorSpec::parse("1|2").unwrap(),
                MinorSpec::parse("2|1").unwrap(),
            ]
        );
    }

    #[test]
    fn zero_pattern_of_worked_example_contains_the_determinant() {
        let z = zero_pattern(&mat![[16, 5, 0], [12, 6, 3], [4, 2, 1]]).unwrap();
        assert_eq!(z.total_minors, 19); // C(6,3) − 1
        for spec in ["1|3", "2,3|1,2", "2,3|2,3", "1,2,3|1,2,3"] {
            assert!(
                z.contains(&MinorSpec::parse(spec).unwrap()),
                "missing {spec}"
            );
        }
    }

    #[test]
    fn vanishing_set_is_constant_on_each_cell() {
        for (m, p) in [(2, 2), (2, 3), (3, 3)] {
            for c in enumerate_diagrams(m, p).unwrap() {
                let base = zero_pattern(&representative(&c)).unwrap();
                for seed in [3u64, 17] {
                    let other = zero_pattern(&random_representative(&c, seed)).unwrap();
                    assert_eq!(base, other, "cell pattern varies for\n{c}");
                }
            }
        }
    }

    #[test]
    fn corner_only_pattern_is_never_realized() {
        // No nonempty 2×2 cell vanishes exactly on the single minor [1|1].
        let target = vec![MinorSpec::parse("1|1").unwrap()];
        for c in enumerate_diagrams(2, 2).unwrap() {
            let z = zero_pattern(&representative(&c)).unwrap();
            assert_ne!(z.vanishing, target);
        }
    }

    #[test]
    fn capacity_guard_kicks_in() {
        let m = Matrix::zero(9, 9);
        assert!(matches!(is_tnn_bruteforce(&m), Err(Error::Capacity { .. })));
        assert!(matches!(zero_pattern(&m), Err(Error::Capacity { .. })));
        // 8×8 is the largest square shape the default guard admits
        assert!(is_tnn_bruteforce(&Matrix::zero(8, 8)).is_ok());
    }
}
