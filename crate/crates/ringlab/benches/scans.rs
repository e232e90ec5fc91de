//! Bulk-scan benchmarks. Run `cargo bench` for the rayon-backed scans and
//! `cargo bench --no-default-features` for the sequential fallback to
//! compare the two execution modes on identical inputs.

use criterion::{criterion_group, criterion_main, Criterion};

use ringlab::classify;
use ringlab::construct::BuildConfig;
use ringlab::expr;
use ringlab::harness;
use ringlab::ring::DEFAULT_VALIDATE_BOUND;

fn cfg() -> BuildConfig {
    BuildConfig::default()
}

fn bench_element_sets(c: &mut Criterion) {
    c.bench_function("element_sets M(2,Zn(4))", |b| {
        b.iter(|| {
            // rebuild so the OnceLock cache does not absorb the work
            let ring = expr::build_from_text("M(2,Zn(4))", &cfg()).unwrap();
            std::hint::black_box(ring.element_sets().units.len())
        })
    });
}

fn bench_is_gnc(c: &mut Criterion) {
    let ring = expr::build_from_text("M(2,Zn(4))", &cfg()).unwrap();
    ring.element_sets();
    c.bench_function("is_gnc M(2,Zn(4))", |b| {
        b.iter(|| std::hint::black_box(classify::is_gnc(&ring).holds))
    });
}

fn bench_validate(c: &mut Criterion) {
    let ring = expr::build_from_text("Bnm(Zn(4),2,2)", &cfg()).unwrap();
    c.bench_function("validate Bnm(Zn(4),2,2) exhaustive", |b| {
        b.iter(|| std::hint::black_box(ring.validate(DEFAULT_VALIDATE_BOUND, 0).is_valid()))
    });
}

fn bench_scan_zn(c: &mut Criterion) {
    c.bench_function("scan_zn 32", |b| {
        b.iter(|| std::hint::black_box(harness::scan_zn(32, &cfg()).unwrap().len()))
    });
}

criterion_group!(
    benches,
    bench_element_sets,
    bench_is_gnc,
    bench_validate,
    bench_scan_zn
);
criterion_main!(benches);
