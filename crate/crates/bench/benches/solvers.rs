use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use hqm_bench::{coulomb, oscillator, table1_mesh, table1_operator};
use hqm_core::fd::{eigenvalues_below, solve_bound_states, sweep, POINTS_PER_LENGTH};
use hqm_core::potentials::threshold_energy;
use hqm_core::specfun::{bessel_j_sequence, confluent_1f1_truncated, gauss_laguerre, laguerre};
use hqm_core::spectrum::energy_physical;
use hqm_core::BoundState;

fn eigen(c: &mut Criterion) {
    let op = table1_operator();
    let bound = threshold_energy(coulomb(2.0, 1).params());
    c.bench_function("sturm_bisection_3_levels_24000", |b| {
        b.iter(|| eigenvalues_below(black_box(&op), bound, 3).unwrap())
    });

    let mesh = table1_mesh();
    let model = coulomb(2.0, 1);
    c.bench_function("table1_solve_one_row_group", |b| {
        b.iter(|| solve_bound_states(black_box(&model), &mesh, 3).unwrap())
    });

    let model = oscillator(5.0);
    let mesh = model.default_grid(5, POINTS_PER_LENGTH).unwrap();
    c.bench_function("oscillator_5_levels_default_mesh", |b| {
        b.iter(|| solve_bound_states(black_box(&model), &mesh, 5).unwrap())
    });

    let points: Vec<_> = (0..10)
        .map(|i| (1.0 + f64::from(i), oscillator(1.0 + f64::from(i))))
        .collect();
    let mesh = oscillator(10.0).default_grid(5, POINTS_PER_LENGTH).unwrap();
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    group.bench_function("oscillator_10_steps", |b| {
        b.iter(|| sweep(black_box(&points), &mesh, 5).unwrap())
    });
    group.finish();
}

fn closed_form(c: &mut Criterion) {
    let p = *coulomb(2.0, 1).params();
    c.bench_function("energy_physical", |b| {
        b.iter(|| energy_physical(black_box(2), &p).unwrap())
    });
    let s = BoundState::new(2, &p).unwrap();
    c.bench_function("wavefunction_eval", |b| b.iter(|| s.eval(black_box(1.3e-9))));
}

fn special_functions(c: &mut Criterion) {
    c.bench_function("laguerre_n20", |b| {
        b.iter(|| laguerre(20, black_box(2.0), black_box(7.5)).unwrap())
    });
    c.bench_function("confluent_1f1_n20", |b| {
        b.iter(|| confluent_1f1_truncated(20, black_box(3.0), black_box(7.5)).unwrap())
    });
    c.bench_function("bessel_j_sequence_10", |b| {
        b.iter(|| bessel_j_sequence(10, black_box(12.5)).unwrap())
    });
    c.bench_function("gauss_laguerre_64", |b| {
        b.iter(|| gauss_laguerre(black_box(64)).unwrap())
    });
}

criterion_group!(benches, eigen, closed_form, special_functions);
criterion_main!(benches);
