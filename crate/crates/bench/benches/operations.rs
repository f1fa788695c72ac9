use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hakensum::scenario_file::shipped;
use hakensum::{
    compute_thresholds, essential_certificate, reduce_parities, resolve, trace, tuna_can_run, CanState, FirstMove,
    IntersectionInventory, ScenarioFile, Sign,
};

fn load(text: &str) -> ScenarioFile {
    ScenarioFile::from_json(text).unwrap()
}

fn bench_resolve(c: &mut Criterion) {
    let file = load(shipped::CASSON_GORDON_M5);
    let pc = file.patch_complex().unwrap();
    let mut group = c.benchmark_group("resolve");
    for n in [2u64, 20, 200] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| resolve(pc, black_box(n))));
    }
    group.finish();
}

fn bench_trace(c: &mut Criterion) {
    let file = load(shipped::DISK_SHIFTS);
    let mut group = c.benchmark_group("trace");
    for n in [30u64, 3_000, 300_000] {
        let dp = file.disk_pattern().unwrap().with_n(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &dp, |b, dp| b.iter(|| trace(black_box(dp))));
    }
    group.finish();
}

fn bench_shifts(c: &mut Criterion) {
    let file = load(shipped::DISK_SHIFTS);
    let sides = file.sides().unwrap();
    let (p, d) = sides.systems().unwrap();
    let euler = sides.euler.unwrap();
    c.bench_function("thresholds", |b| b.iter(|| compute_thresholds(black_box(sides.h), &p, &d)));
    let prof = compute_thresholds(sides.h, &p, &d);
    c.bench_function("certificate", |b| {
        b.iter(|| essential_certificate(black_box(10), 30, &prof, &p, &d, &euler).unwrap())
    });
}

fn bench_reductions(c: &mut Criterion) {
    let word: Vec<Sign> = (0..400).map(|k| if k % 3 == 2 { Sign::Minus } else { Sign::Plus }).collect();
    let inv = IntersectionInventory::from_parities(&word, 1_000);
    c.bench_function("reduce_parities", |b| b.iter(|| reduce_parities(black_box(&inv)).unwrap()));
    let cans = CanState::from_sizes(&[6, 5, 4, 3], 4).unwrap();
    c.bench_function("tuna_can_run", |b| b.iter(|| tuna_can_run(black_box(&cans), &mut FirstMove)));
}

criterion_group!(benches, bench_resolve, bench_trace, bench_shifts, bench_reductions);
criterion_main!(benches);
