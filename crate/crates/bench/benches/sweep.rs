use criterion::{criterion_group, criterion_main, Criterion};
use qcorr_core::{figure_preset, run_sweep_with_threads, Quantity};
use std::hint::black_box;

fn bench(c: &mut Criterion) {
    let mut cfg = figure_preset("fig4a").unwrap();
    cfg.quantities = Quantity::ALL.to_vec();
    let mut group = c.benchmark_group("fig4a_all_quantities");
    group.sample_size(20);
    for threads in [1, 0] {
        let id = if threads == 0 {
            "auto".to_string()
        } else {
            threads.to_string()
        };
        group.bench_function(id, |b| {
            b.iter(|| run_sweep_with_threads(black_box(&cfg), threads).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
