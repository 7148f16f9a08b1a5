//! Multiplication budget for the series layer.
//!
//! The Cauchy product is schoolbook, but the outer loop runs over the
//! operand with fewer nonzero coefficients. Theta factors at precision P
//! have about sqrt(P) nonzero entries, so a four-factor generating series
//! costs roughly 3 * sqrt(P) * P checked multiply-adds instead of 3 * P^2:
//! at P = 10^4 that is ~3e6 operations, a few milliseconds on one desk
//! core, against the 2 s acceptance budget. The dense*dense benchmark
//! shows the raw P^2/2 path (~5e7 ops at P = 10^4) that products of
//! already-dense intermediates fall back to; it still clears the budget
//! with an order of magnitude to spare. An FFT path stays out of scope
//! until these numbers stop holding.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use theta_lab::form::FormTuple;
use theta_lab::series::PowerSeries;
use theta_lab::theta;

fn four_factor_product(c: &mut Criterion) {
    let form = FormTuple::new(1, 2, 3, 5).unwrap();
    c.bench_function("n_series precision 1e4", |b| {
        b.iter(|| theta::n_series(black_box(form), 10_000).unwrap())
    });
    c.bench_function("t_prime_series precision 1e4", |b| {
        b.iter(|| theta::t_prime_series(black_box(form), 10_000).unwrap())
    });
}

fn dense_square(c: &mut Criterion) {
    // fully dense operands: the worst case the zero-skipping cannot help
    let dense = PowerSeries::from_coeffs((0..10_000).map(|i| (i % 17) as i64 + 1).collect());
    c.bench_function("dense*dense precision 1e4", |b| {
        b.iter(|| black_box(&dense).mul(black_box(&dense)).unwrap())
    });
}

fn identity_suite(c: &mut Criterion) {
    c.bench_function("identity registry at 2048", |b| {
        b.iter(|| {
            for ident in theta::identity_registry() {
                assert!(ident.check(2048).unwrap().passed());
            }
        })
    });
}

criterion_group!(benches, four_factor_product, dense_square, identity_suite);
criterion_main!(benches);
