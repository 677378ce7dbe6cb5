use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qcatalan::verifier::{check_bnk_power, clear_ratio_cache, s_r_multi};
use qcatalan_bench::equal_indices;

fn bnk_power(c: &mut Criterion) {
    let mut group = c.benchmark_group("bnk_power");
    for n in [4i64, 8, 12] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, &n| {
            bench.iter(|| check_bnk_power(black_box(n), 1, 2, 3).expect("in domain"))
        });
    }
    group.finish();
}

fn s_r_multi_cold(c: &mut Criterion) {
    let mut group = c.benchmark_group("s_r_multi");
    group.sample_size(20);
    for m in [2usize, 3, 4] {
        let spec = equal_indices(m, 4, 1, 1);
        group.bench_with_input(BenchmarkId::from_parameter(m), &spec, |bench, spec| {
            bench.iter(|| {
                clear_ratio_cache();
                s_r_multi(black_box(spec))
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bnk_power, s_r_multi_cold);
criterion_main!(benches);
