//! Sequential vs rayon comparison for the enumeration sweeps.
//!
//! Run with `cargo bench -p bitourn`. The public entry points dispatch to
//! rayon under the default `parallel` feature; the `_seq` variants are the
//! single-threaded fallback, benchmarked here side by side.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use bitourn::oracle;

fn bench_census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(20);
    for &(m, n) in &[(3, 4), (4, 4), (4, 5)] {
        let size = format!("{m}x{n}");
        group.bench_function(BenchmarkId::new("seq", &size), |b| {
            b.iter(|| oracle::enumerate_bitournaments_seq(black_box(m), black_box(n)).unwrap())
        });
        group.bench_function(BenchmarkId::new("rayon", &size), |b| {
            b.iter(|| oracle::enumerate_bitournaments(black_box(m), black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn bench_cross_validate(c: &mut Criterion) {
    let mut group = c.benchmark_group("cross_validate");
    group.sample_size(20);
    for &(m, n) in &[(4, 4), (3, 5)] {
        let size = format!("{m}x{n}");
        group.bench_function(BenchmarkId::new("seq", &size), |b| {
            b.iter(|| oracle::cross_validate_seq(black_box(m), black_box(n)).unwrap())
        });
        group.bench_function(BenchmarkId::new("rayon", &size), |b| {
            b.iter(|| oracle::cross_validate(black_box(m), black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn bench_tournaments(c: &mut Criterion) {
    let mut group = c.benchmark_group("tournaments");
    group.sample_size(20);
    for &n in &[6usize, 7] {
        group.bench_function(BenchmarkId::new("seq", n), |b| {
            b.iter(|| oracle::enumerate_tournaments_seq(black_box(n)).unwrap())
        });
        group.bench_function(BenchmarkId::new("rayon", n), |b| {
            b.iter(|| oracle::enumerate_tournaments(black_box(n)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_census,
    bench_cross_validate,
    bench_tournaments
);
criterion_main!(benches);
