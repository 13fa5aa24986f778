use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use tnncell::minors::determinant;
use tnncell::oracle::zero_pattern;
use tnncell::recognition::membership_test;
use tnncell::reduction::cauchon_reduce;
use tnncell_bench::case;

/// n² lacunary minors vs the full C(2n,n)−1 sweep on the same matrix.
fn membership_vs_all_minors(c: &mut Criterion) {
    let mut group = c.benchmark_group("cell-membership");
    for n in [3usize, 4, 5, 6] {
        let case = case(n, 0x100 + n as u64);
        group.bench_function(BenchmarkId::new("mp-minors", n), |b| {
            b.iter(|| membership_test(&case.matrix, &case.scheme).unwrap())
        });
        group.bench_function(BenchmarkId::new("all-minors", n), |b| {
            b.iter(|| zero_pattern(&case.matrix).unwrap())
        });
    }
    group.finish();
}

fn reduction_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("reduction");
    for n in [4usize, 6, 8] {
        let case = case(n, 0x200 + n as u64);
        group.bench_function(BenchmarkId::from_parameter(n), |b| {
            b.iter(|| cauchon_reduce(&case.matrix))
        });
    }
    group.finish();
}

fn exact_determinant(c: &mut Criterion) {
    let mut group = c.benchmark_group("determinant");
    for n in [4usize, 6, 8] {
        let case = case(n, 0x300 + n as u64);
        group.bench_function(BenchmarkId::from_parameter(n), |b| {
            b.iter(|| determinant(&case.matrix).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    membership_vs_all_minors,
    reduction_sweep,
    exact_determinant
);
criterion_main!(benches);
