//! Criterion benchmarks for the hot kernels of `lucastrick-core`.

use std::hint::black_box;

use criterion::{BenchmarkId, Criterion};
use lucastrick_core::{
    common_trick_range, max_div_index_bruteforce, term, term_fast, verify_fl_uniqueness, FibLucas, RecurrenceSpec,
    ScanConfig, SequenceDef,
};

pub fn terms(c: &mut Criterion) {
    let mut group = c.benchmark_group("fibonacci-term");
    let fib = SequenceDef::fibonacci();
    for n in [1_000u64, 10_000, 100_000] {
        group.bench_with_input(BenchmarkId::new("iterative", n), &n, |b, &n| {
            b.iter(|| term(&fib, black_box(n as i64)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("fast-doubling", n), &n, |b, &n| {
            b.iter(|| term_fast(FibLucas::Fibonacci, black_box(n)))
        });
    }
    group.bench_function("fast-doubling/1000000", |b| b.iter(|| term_fast(FibLucas::Fibonacci, black_box(1_000_000))));
    group.finish();
}

pub fn divisibility(c: &mut Criterion) {
    let mut group = c.benchmark_group("maxdiv-brute");
    let config = ScanConfig::default();
    for (name, seq) in
        [("fibonacci", SequenceDef::fibonacci()), ("lucas", SequenceDef::lucas()), ("pell", SequenceDef::pell())]
    {
        group.bench_function(name, |b| {
            b.iter(|| {
                for n in 1..=200 {
                    black_box(max_div_index_bruteforce(&seq, n, &config).unwrap());
                }
            })
        });
    }
    group.finish();
}

pub fn scans(c: &mut Criterion) {
    let mut group = c.benchmark_group("scans");
    group.sample_size(10);
    group.bench_function("fl-uniqueness/25", |b| b.iter(|| verify_fl_uniqueness(black_box(25)).unwrap()));
    group.bench_function("fibonacci-tricks/200", |b| {
        b.iter(|| common_trick_range(&RecurrenceSpec::fibonacci(), black_box(200)))
    });
    group.finish();
}

pub fn benchmarks(c: &mut Criterion) {
    terms(c);
    divisibility(c);
    scans(c);
}
