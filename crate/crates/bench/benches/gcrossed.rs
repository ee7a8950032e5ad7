//! Graded bookkeeping benchmarks: the Hurwitz action, twist-word
//! accumulation, and full graded evaluation of a braided word.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use plait_bench::{random_braid, random_element, seeded};
use plait_core::{evaluate_graded, hurwitz_act, twist_words, FiniteGroup};
use rand::Rng;
use std::hint::black_box;

fn bench_hurwitz(c: &mut Criterion) {
    let sym3 = FiniteGroup::symmetric(3).unwrap();
    let mut group = c.benchmark_group("hurwitz_act");
    for len in [32usize, 128] {
        let mut rng = seeded(len as u64);
        let braid = random_braid(&mut rng, 6, len);
        let grades: Vec<usize> = (0..6).map(|_| rng.gen_range(0..sym3.order())).collect();
        group.bench_with_input(
            BenchmarkId::from_parameter(len),
            &(braid, grades),
            |b, (braid, grades)| {
                b.iter(|| hurwitz_act(&sym3, black_box(braid), black_box(grades)).unwrap())
            },
        );
    }
    group.finish();
}

fn bench_twist_words(c: &mut Criterion) {
    let sym3 = FiniteGroup::symmetric(3).unwrap();
    let mut rng = seeded(5);
    let braid = random_braid(&mut rng, 6, 64);
    let grades: Vec<usize> = (0..6).map(|_| rng.gen_range(0..sym3.order())).collect();
    c.bench_function("twist_words/n6-len64", |b| {
        b.iter(|| twist_words(&sym3, black_box(&braid), black_box(&grades)).unwrap())
    });
}

fn bench_evaluate_graded(c: &mut Criterion) {
    let sym3 = FiniteGroup::symmetric(3).unwrap();
    let mut rng = seeded(9);
    let element = random_element(&mut rng, 5, 48);
    let grades: Vec<usize> = (0..5).map(|_| rng.gen_range(0..sym3.order())).collect();
    c.bench_function("evaluate_graded/arity5-len48", |b| {
        b.iter(|| evaluate_graded(&sym3, black_box(&element), black_box(&grades)).unwrap())
    });
}

criterion_group!(benches, bench_hurwitz, bench_twist_words, bench_evaluate_graded);
criterion_main!(benches);
