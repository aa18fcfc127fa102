use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use zetavals_core::{euler_poly, li_neg_euler, li_neg_stirling, special_value, ArgumentSpec, FunctionTag};

fn polynomials(c: &mut Criterion) {
    c.bench_function("euler_poly(8)", |b| b.iter(|| euler_poly(black_box(8))));
    c.bench_function("li_neg stirling n=10", |b| b.iter(|| li_neg_stirling(black_box(10)).unwrap()));
    c.bench_function("li_neg euler n=10", |b| b.iter(|| li_neg_euler(black_box(10)).unwrap()));
}

fn values(c: &mut Criterion) {
    let a = ArgumentSpec::rational(2, 7).unwrap();
    c.bench_function("Q(-6, 2/7)", |b| b.iter(|| special_value(FunctionTag::Q, black_box(-6), a).unwrap()));
    c.bench_function("Z(6, 2/7)", |b| b.iter(|| special_value(FunctionTag::Z, black_box(6), a).unwrap()));
    c.bench_function("Z(6) symbolic", |b| {
        b.iter(|| special_value(FunctionTag::Z, black_box(6), ArgumentSpec::Symbolic).unwrap())
    });
    let sym = special_value(FunctionTag::P, -5, ArgumentSpec::Symbolic).unwrap();
    c.bench_function("P(-5) specialised at 3/11", |b| b.iter(|| sym.at_rational(black_box(3), 11).unwrap()));
}

criterion_group!(benches, polynomials, values);
criterion_main!(benches);
