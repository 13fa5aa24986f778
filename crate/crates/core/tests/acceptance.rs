//! Acceptance suite: one test per release criterion, each printing a
//! `[PASS]` line (run with `-- --nocapture` to see them). Every tolerance
//! is exact — the criteria are sign and equality checks over exact
//! rationals plus pinned combinatorial counts.

use std::time::Instant;

use tnncell::diagram::{census, enumerate_diagrams, is_cauchon, CauchonDiagram};
use tnncell::exact::{grid_positions, rational, GridIndex, Matrix};
use tnncell::lacunary::lacunary_from;
use tnncell::mat;
use tnncell::minors::{
    all_minor_specs, antidiagonal_reflect, conjugate_spec, det_evaluations, gasca_pena_tp_test,
    minor, reset_det_evaluations,
};
use tnncell::oracle::{is_tnn_bruteforce, is_tp_bruteforce, zero_pattern};
use tnncell::recognition::{build_scheme, membership_test, product_identity_check};
use tnncell::reduction::{
    cauchon_reduce, classify, random_representative, representative, restore,
};
use tnncell::rng::SplitMix64;

fn worked_matrix() -> Matrix {
    mat![[16, 5, 0], [12, 6, 3], [4, 2, 1]]
}

fn worked_diagram() -> CauchonDiagram {
    CauchonDiagram::parse_ascii("..#\n##.\n...\n").unwrap()
}

fn random_rational_matrix(rows: usize, cols: usize, rng: &mut SplitMix64) -> Matrix {
    let mut m = Matrix::zero(rows, cols);
    for ix in grid_positions(rows, cols) {
        let n = rng.range_inclusive(0, 18) as i64 - 9;
        let d = rng.range_inclusive(1, 9) as i64;
        m = m.with_entry(ix, rational(n, d).unwrap());
    }
    m
}

fn random_t_matrix(rows: usize, cols: usize, rng: &mut SplitMix64) -> Matrix {
    let c = CauchonDiagram::random(rows, cols, rng);
    let mut t = Matrix::zero(rows, cols);
    for ix in grid_positions(rows, cols) {
        if c.is_white(ix) {
            let n = rng.range_inclusive(1, 9) as i64;
            let d = rng.range_inclusive(1, 9) as i64;
            t = t.with_entry(ix, rational(n, d).unwrap());
        }
    }
    t
}

#[test]
fn criterion_01_diagram_census_counts() {
    let start = Instant::now();
    let counts: Vec<usize> = [(1, 1), (2, 2), (3, 3), (4, 4)]
        .iter()
        .map(|&(m, p)| enumerate_diagrams(m, p).unwrap().len())
        .collect();
    let elapsed = start.elapsed();
    assert_eq!(counts, vec![2, 14, 230, 6902]);
    assert!(elapsed.as_secs_f64() < 5.0, "enumeration took {elapsed:?}");
    println!("[PASS] criterion 1: diagram counts 2/14/230/6902 for 1x1..4x4 in {elapsed:?}");
}

#[test]
fn criterion_02_determinant_statistic() {
    let start = Instant::now();
    let c3 = census(3, 3, true, false).unwrap();
    let c4 = census(4, 4, true, false).unwrap();
    let elapsed = start.elapsed();
    assert_eq!((c3.total, c3.det_vanishing), (230, Some(194)));
    assert_eq!((c4.total, c4.det_vanishing), (6902, Some(6326)));
    assert!(elapsed.as_secs_f64() < 60.0, "census took {elapsed:?}");
    println!(
        "[PASS] criterion 2: determinant vanishes on 194/230 cells (3x3) and 6326/6902 (4x4) in {elapsed:?}"
    );
}

#[test]
fn criterion_03_worked_example_membership() {
    let scheme = build_scheme(&worked_diagram());
    let report = membership_test(&worked_matrix(), &scheme).unwrap();
    assert!(report.verdict);
    let expected: Vec<(&str, i64)> = vec![
        ("[1,3|1,2]", 12),
        ("[1,2|2,3]", 15),
        ("[1|3]", 0),
        ("[2,3|1,2]", 0),
        ("[2,3|2,3]", 0),
        ("[2|3]", 3),
        ("[3|1]", 4),
        ("[3|2]", 2),
        ("[3|3]", 1),
    ];
    assert_eq!(report.boxes.len(), 9);
    for (outcome, (spec, value)) in report.boxes.iter().zip(&expected) {
        assert_eq!(outcome.spec.to_string(), *spec);
        assert_eq!(outcome.value, rational(*value, 1).unwrap());
        assert!(outcome.pass);
    }
    println!("[PASS] criterion 3: worked 3x3 example satisfies all nine sign conditions");
}

#[test]
fn criterion_04_constructive_algorithm_fidelity() {
    let c = worked_diagram();
    let seq = lacunary_from(&c, GridIndex::new(1, 2)).unwrap();
    assert_eq!(seq.points(), [GridIndex::new(1, 2), GridIndex::new(2, 3)]);

    let scheme = build_scheme(&c);
    let expected = [
        vec![(1, 1), (3, 2)],
        vec![(1, 2), (2, 3)],
        vec![(1, 3)],
        vec![(2, 1), (3, 2)],
        vec![(2, 2), (3, 3)],
        vec![(2, 3)],
        vec![(3, 1)],
        vec![(3, 2)],
        vec![(3, 3)],
    ];
    for (entry, points) in scheme.entries().iter().zip(&expected) {
        let want: Vec<GridIndex> = points.iter().map(|&(i, a)| GridIndex::new(i, a)).collect();
        assert_eq!(entry.sequence.points(), want, "box {}", entry.position);
    }
    println!("[PASS] criterion 4: constructive algorithm reproduces the published sequences");
}

/// Battery for one diagram: the verdict of the mp-minor test must agree with
/// the brute-force definition of "tnn and in this cell" on every matrix.
fn equivalence_battery(c: &CauchonDiagram, others: &[CauchonDiagram], rng: &mut SplitMix64) -> u64 {
    let scheme = build_scheme(c);
    let mut checked = 0;
    let mut candidates: Vec<Matrix> = vec![representative(c)];
    for _ in 0..5 {
        candidates.push(random_representative(c, rng.next_u64()));
    }
    for k in 0..5usize {
        let other = loop {
            let pick = &others[(rng.next_u64() as usize) % others.len()];
            if pick != c {
                break pick;
            }
        };
        candidates.push(if k % 2 == 0 {
            representative(other)
        } else {
            random_representative(other, rng.next_u64())
        });
    }
    for _ in 0..5 {
        let base = representative(c);
        let all: Vec<GridIndex> = grid_positions(c.rows(), c.cols()).collect();
        let ix = all[(rng.next_u64() as usize) % all.len()];
        let delta = if rng.chance(1, 2) {
            rational(1, 1).unwrap()
        } else {
            rational(-1, 1).unwrap()
        };
        candidates.push(base.with_entry(ix, base.at(ix) + delta));
    }
    for _ in 0..5 {
        candidates.push(random_rational_matrix(c.rows(), c.cols(), rng));
    }
    for m in candidates {
        let fast = membership_test(&m, &scheme).unwrap().verdict;
        let truth = is_tnn_bruteforce(&m).unwrap() && classify(&m).diagram.as_ref() == Some(c);
        assert_eq!(fast, truth, "disagreement for diagram\n{c}on matrix\n{m}");
        checked += 1;
    }
    checked
}

#[test]
fn criterion_05_membership_equivalence_suite() {
    let mut rng = SplitMix64::new(0x5eed_ce11);
    let mut checked = 0u64;

    let all3 = enumerate_diagrams(3, 3).unwrap();
    for c in &all3 {
        checked += equivalence_battery(c, &all3, &mut rng);
    }

    let all4 = enumerate_diagrams(4, 4).unwrap();
    let sample4: Vec<CauchonDiagram> = all4.iter().step_by(34).cloned().collect();
    assert!(
        sample4.len() >= 200,
        "sample of {} diagrams too small",
        sample4.len()
    );
    for c in &sample4 {
        checked += equivalence_battery(c, &all4, &mut rng);
    }

    println!(
        "[PASS] criterion 5: mp-minor verdict matches brute force on {checked} matrices \
         ({} diagrams at 3x3, {} at 4x4), zero disagreements",
        all3.len(),
        sample4.len()
    );
}

#[test]
fn criterion_06_reduction_restoration_roundtrip() {
    let mut rng = SplitMix64::new(42);
    for trial in 0..1000 {
        let rows = rng.range_inclusive(1, 5) as usize;
        let cols = rng.range_inclusive(1, 5) as usize;
        let t = random_t_matrix(rows, cols, &mut rng);
        let m = restore(&t).unwrap();
        let back = cauchon_reduce(&m).t_matrix;
        assert_eq!(back, t, "roundtrip failed on trial {trial}");
    }
    println!("[PASS] criterion 6: reduce∘restore is the identity on 1000 matrices up to 5x5");
}

#[test]
fn criterion_07_tnn_matrices_are_cauchon_matrices() {
    let mut rng = SplitMix64::new(7);
    for trial in 0..1000 {
        let rows = rng.range_inclusive(1, 5) as usize;
        let cols = rng.range_inclusive(1, 5) as usize;
        let c = CauchonDiagram::random(rows, cols, &mut rng);
        let m = random_representative(&c, rng.next_u64());
        let zeros = m.zero_positions();
        assert!(
            is_cauchon(rows, cols, &zeros).unwrap(),
            "trial {trial}: tnn matrix with non-Cauchon zero pattern\n{m}"
        );
    }
    println!("[PASS] criterion 7: entry zero pattern of 1000 tnn matrices is a Cauchon diagram");
}

#[test]
fn criterion_08_product_identity_all_3x3_cells() {
    let mut boxes_checked = 0;
    for c in enumerate_diagrams(3, 3).unwrap() {
        let m = representative(&c);
        for position in grid_positions(3, 3) {
            let seq = lacunary_from(&c, position).unwrap();
            assert!(
                product_identity_check(&m, &c, &seq).unwrap(),
                "product identity failed at {position} for\n{c}"
            );
            boxes_checked += 1;
        }
    }
    assert_eq!(boxes_checked, 230 * 9);
    println!(
        "[PASS] criterion 8: lacunary minors factor into t-values on all {boxes_checked} boxes"
    );
}

#[test]
fn criterion_09_reflection_identity() {
    let mut rng = SplitMix64::new(1009);
    for _ in 0..500 {
        let rows = rng.range_inclusive(1, 5) as usize;
        let cols = rng.range_inclusive(1, 6) as usize;
        let m = random_rational_matrix(rows, cols, &mut rng);
        let refl = antidiagonal_reflect(&m);
        let specs = all_minor_specs(rows, cols);
        let s = &specs[(rng.next_u64() as usize) % specs.len()];
        let conj = conjugate_spec(s, rows, cols);
        assert_eq!(
            minor(&m, s).unwrap(),
            minor(&refl, &conj).unwrap(),
            "reflection identity failed for {s} on\n{m}"
        );
    }
    println!("[PASS] criterion 9: reflection identity exact on 500 random (matrix, minor) pairs");
}

#[test]
fn criterion_10_total_positivity_special_case() {
    let mut rng = SplitMix64::new(99);
    let mut tp_seen = 0;
    for n in [3usize, 4] {
        for trial in 0..100 {
            // alternate TP-cell members with arbitrary rational matrices
            let m = if trial % 2 == 0 {
                random_representative(&CauchonDiagram::all_white(n, n), rng.next_u64())
            } else {
                random_rational_matrix(n, n, &mut rng)
            };
            let fast = gasca_pena_tp_test(&m);
            let truth = is_tp_bruteforce(&m).unwrap();
            assert_eq!(fast, truth, "TP test disagreement on\n{m}");
            if truth {
                tp_seen += 1;
            }
        }
    }
    assert!(
        tp_seen >= 100,
        "mixture degenerated: only {tp_seen} TP matrices"
    );

    for _ in 0..100 {
        let n = rng.range_inclusive(2, 4) as usize;
        let m = random_representative(&CauchonDiagram::all_white(n, n), rng.next_u64());
        assert!(tnncell::reduction::tp_t_formula_check(&m).unwrap());
    }
    println!(
        "[PASS] criterion 10: final-minor TP test matches brute force on 200 matrices; \
         t-value ratio formula exact on 100 TP matrices"
    );
}

#[test]
fn criterion_11_minor_budget_and_speedup() {
    let binomial = |n: u64, k: u64| -> u64 {
        let mut acc = 1u64;
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    };
    let mut rng = SplitMix64::new(2024);
    let mut timings = Vec::new();
    for n in [3usize, 4, 8] {
        let c = CauchonDiagram::random(n, n, &mut rng);
        let m = random_representative(&c, rng.next_u64());
        let scheme = build_scheme(&c);

        reset_det_evaluations();
        let start = Instant::now();
        let report = membership_test(&m, &scheme).unwrap();
        let fast_time = start.elapsed();
        let fast_count = det_evaluations();
        assert!(report.verdict, "representative must pass its own scheme");
        assert_eq!(fast_count, (n * n) as u64, "membership must cost n² minors");

        reset_det_evaluations();
        let start = Instant::now();
        let pattern = zero_pattern(&m).unwrap();
        let slow_time = start.elapsed();
        let slow_count = det_evaluations();
        let expected = binomial(2 * n as u64, n as u64) - 1;
        assert_eq!(slow_count, expected, "oracle must sweep C(2n,n)−1 minors");
        assert_eq!(pattern.total_minors as u64, expected);

        timings.push((n, fast_count, fast_time, slow_count, slow_time));
    }
    let (_, _, fast_time, _, slow_time) = timings.last().unwrap();
    let speedup = slow_time.as_secs_f64() / fast_time.as_secs_f64().max(1e-9);
    for (n, fc, ft, sc, st) in &timings {
        println!(
            "        n={n}: {fc} minors in {ft:?} (membership) vs {sc} minors in {st:?} (oracle)"
        );
    }
    println!(
        "[PASS] criterion 11: minor budgets exact at n=3,4,8 (9/19, 16/69, 64/12869); \
         observed n=8 wall-clock speedup {speedup:.1}x (soft target >10x)"
    );
    if speedup <= 10.0 {
        println!("        note: soft speedup target missed on this machine");
    }
}
