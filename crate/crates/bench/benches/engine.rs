use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use multiplier_bench::{random_batch, staircase};
use multiplier_core::newton::{HullMethod, NewtonPolyhedron};
use multiplier_core::symbolic::{analyze, symbolic_power};
use multiplier_core::theorems::campaign_instance;
use multiplier_core::{jumping_numbers, lct, multiplier_ideal, Limits, MonomialIdeal, Rational};

fn hulls(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("newton");
    for d in [2usize, 3, 4] {
        let batch = random_batch(1, d, 16);
        group.bench_with_input(BenchmarkId::new("auto", d), &batch, |b, batch| {
            b.iter(|| {
                for ideal in batch {
                    black_box(NewtonPolyhedron::build(ideal, &limits, HullMethod::Auto).unwrap());
                }
            })
        });
    }
    let planar = random_batch(2, 2, 16);
    group.bench_function("double-description/2", |b| {
        b.iter(|| {
            for ideal in &planar {
                black_box(NewtonPolyhedron::build(ideal, &limits, HullMethod::DoubleDescription).unwrap());
            }
        })
    });
    group.finish();
}

fn multiplier_ideals(c: &mut Criterion) {
    let a = staircase();
    c.bench_function("mi/staircase/c=1", |b| {
        b.iter(|| multiplier_ideal(black_box(&a), &Rational::from_integer(1.into())))
    });
    let m4 = MonomialIdeal::maximal(4).unwrap();
    c.bench_function("mi/maximal4/c=8", |b| {
        b.iter(|| multiplier_ideal(black_box(&m4), &Rational::from_integer(8.into())))
    });
    let batch = random_batch(3, 3, 16);
    c.bench_function("lct/random3", |b| {
        b.iter(|| {
            for ideal in &batch {
                black_box(lct(ideal).unwrap());
            }
        })
    });
    c.bench_function("jumps/random3/T=3", |b| {
        b.iter(|| {
            for ideal in &batch {
                black_box(jumping_numbers(ideal, &Rational::from_integer(3.into())).unwrap());
            }
        })
    });
}

fn symbolic(c: &mut Criterion) {
    let triangle = MonomialIdeal::from_exponents(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).unwrap();
    let q = analyze(&triangle).unwrap();
    c.bench_function("symbolic-power/triangle/m=6", |b| b.iter(|| symbolic_power(black_box(&q), 6).unwrap()));
}

fn campaign(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("campaign");
    group.sample_size(10);
    group.bench_function("instances/8", |b| {
        b.iter(|| {
            for seed in 0..8 {
                black_box(campaign_instance(seed, &limits).unwrap());
            }
        })
    });
    group.finish();
}

criterion_group!(benches, hulls, multiplier_ideals, symbolic, campaign);
criterion_main!(benches);
