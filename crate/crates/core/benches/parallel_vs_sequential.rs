//! Compares the fan-out used for independent coordinate-change trials
//! against a plain sequential loop on the same workload: one initial
//! ideal computation per random change of coordinates.

use criterion::{criterion_group, criterion_main, Criterion};
use ginalg::change::{trial_seed, LinearChange};
use ginalg::exec;
use ginalg::hilbert;
use ginalg::parse;
use ginalg::poly::{Polynomial, Ring};

const CURVE: &str = "ring x1,x2,x3,x4; char 32003; ideal x3^3 - x1*x4^2, \
    x1^2*x3^2 - x2^3*x4, x2^3*x3 - x1^3*x4, x2^6 - x1^5*x3;";

fn one_trial(ring: &Ring, gens: &[Polynomial], t: u64) -> usize {
    let change = LinearChange::random(ring, trial_seed(17, t));
    let moved = change.apply_ideal(ring, gens);
    hilbert::initial_ideal(ring, &moved).gens().len()
}

fn gin_trials(c: &mut Criterion) {
    let src = parse::parse_ideal(CURVE).expect("benchmark input parses");
    let trials: Vec<u64> = (0..8).collect();
    let mut group = c.benchmark_group("gin_trials");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| exec::par_map(&trials, |&t| one_trial(&src.ring, &src.gens, t)))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| exec::seq_map(&trials, |&t| one_trial(&src.ring, &src.gens, t)))
    });
    group.finish();
}

criterion_group!(benches, gin_trials);
criterion_main!(benches);
