//! Benchmarks for the solve hot paths: rayon batch execution against the
//! sequential fallback, plus single-solve baselines for both engines.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use textcover::classical::{solve_classical, ClassicalConfig};
use textcover::harness::exec::{map_batch, map_batch_sequential};
use textcover::harness::gen_scaling;
use textcover::instance::Instance;
use textcover::quantum::{solve_quantum, QuantumConfig};

fn classical_cell(inst: &Instance) -> bool {
    solve_classical(inst, &ClassicalConfig::default())
        .unwrap()
        .feasible()
}

fn quantum_cell(inst: &Instance) -> bool {
    solve_quantum(inst, &QuantumConfig::default())
        .unwrap()
        .feasible()
}

fn bench_batches(c: &mut Criterion) {
    let instances: Vec<Instance> = (0..32).map(|i| gen_scaling(2048, i).unwrap()).collect();

    let mut group = c.benchmark_group("batch_32x2048");
    group.sample_size(20);
    group.bench_function("classical/parallel", |b| {
        b.iter(|| map_batch(black_box(&instances), classical_cell))
    });
    group.bench_function("classical/sequential", |b| {
        b.iter(|| map_batch_sequential(black_box(&instances), classical_cell))
    });
    group.bench_function("quantum-sim/parallel", |b| {
        b.iter(|| map_batch(black_box(&instances), quantum_cell))
    });
    group.bench_function("quantum-sim/sequential", |b| {
        b.iter(|| map_batch_sequential(black_box(&instances), quantum_cell))
    });
    group.finish();
}

fn bench_single_solves(c: &mut Criterion) {
    let inst = gen_scaling(8192, 7).unwrap();
    let mut group = c.benchmark_group("solve_8192");
    group.sample_size(20);
    group.bench_function("classical", |b| b.iter(|| classical_cell(black_box(&inst))));
    group.bench_function("quantum-sim", |b| b.iter(|| quantum_cell(black_box(&inst))));
    group.finish();
}

criterion_group!(benches, bench_batches, bench_single_solves);
criterion_main!(benches);
