//! Word-problem benchmarks: handle reduction and the equality decision on
//! random and deliberately equal word pairs.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use plait_bench::{equal_pair, random_braid, seeded};
use std::hint::black_box;

fn bench_handle_reduction(c: &mut Criterion) {
    let mut group = c.benchmark_group("handle_reduce");
    for len in [16usize, 64, 256] {
        let mut rng = seeded(len as u64);
        let word = random_braid(&mut rng, 5, len);
        group.bench_with_input(BenchmarkId::from_parameter(len), &word, |b, word| {
            b.iter(|| black_box(word).handle_reduced())
        });
    }
    group.finish();
}

fn bench_equality(c: &mut Criterion) {
    let mut group = c.benchmark_group("equals");
    for len in [16usize, 64] {
        let mut rng = seeded(len as u64);
        let unequal = (
            random_braid(&mut rng, 5, len),
            random_braid(&mut rng, 5, len),
        );
        group.bench_with_input(
            BenchmarkId::new("random", len),
            &unequal,
            |b, (x, y)| b.iter(|| black_box(x).equals(black_box(y)).unwrap()),
        );
        let equal = equal_pair(&mut rng, 5, len);
        group.bench_with_input(BenchmarkId::new("equal", len), &equal, |b, (x, y)| {
            b.iter(|| black_box(x).equals(black_box(y)).unwrap())
        });
    }
    group.finish();
}

fn bench_artin_oracle(c: &mut Criterion) {
    let mut rng = seeded(7);
    let word = random_braid(&mut rng, 5, 32);
    c.bench_function("artin_action/len32", |b| {
        b.iter(|| black_box(&word).artin_action())
    });
}

criterion_group!(
    benches,
    bench_handle_reduction,
    bench_equality,
    bench_artin_oracle
);
criterion_main!(benches);
