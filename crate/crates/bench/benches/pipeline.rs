use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use toriparam::decompose::decompose_curve;
use toriparam::poly::{factor_univariate, gcd_multi};
use toriparam::resolution::minimal_resolution_2d;
use toriparam_bench::{factor_target, gcd_pair, pentagon_curve, polygon};

fn polynomials(c: &mut Criterion) {
    let (a, b) = gcd_pair();
    c.bench_function("gcd/bivariate degree 9", |bench| bench.iter(|| gcd_multi(black_box(&a), black_box(&b))));
    let p = factor_target();
    c.bench_function("factor/univariate degree 24", |bench| {
        bench.iter(|| factor_univariate(black_box(&p)).expect("nonzero"))
    });
}

fn pipeline(c: &mut Criterion) {
    let (sys, raw) = pentagon_curve();
    c.bench_function("decompose/pentagon curve", |bench| {
        bench.iter(|| decompose_curve(black_box(&raw), black_box(&sys)).expect("planted"))
    });
    let fan = polygon(&[(0, 0), (7, 2), (3, 5), (-4, 3)]).normal_fan();
    c.bench_function("resolve/quadrilateral", |bench| {
        bench.iter(|| minimal_resolution_2d(black_box(&fan)).expect("plane"))
    });
}

criterion_group!(benches, polynomials, pipeline);
criterion_main!(benches);
