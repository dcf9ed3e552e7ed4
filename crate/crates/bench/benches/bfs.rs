use cayley_bench::fixture;
use cayley_core::bfs::BfsScratch;
use cayley_core::threshold::{estimate_prob, regime_predictions, Regime};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn bounded_diameter(c: &mut Criterion) {
    let mut group = c.benchmark_group("diameter_at_most_2");
    for (spec, regime) in
        [("cyclic:16384", Regime::CyclicUpper), ("elem2:14", Regime::Z2nLower), ("affqr:179", Regime::SpecialUpper)]
    {
        let (g, _) = fixture(spec, 0.0, 0);
        let p = regime_predictions(g.order() as f64, 2, 0.0).unwrap().get(regime);
        let (g, closure) = fixture(spec, p, 1);
        let mut scratch = BfsScratch::new(g.order());
        group.bench_with_input(BenchmarkId::from_parameter(spec), &closure, |b, closure| {
            b.iter(|| scratch.diameter_at_most(&g, black_box(closure), 2))
        });
    }
    group.finish();
}

fn full_bfs(c: &mut Criterion) {
    let (g, closure) = fixture("symmetric:7", 0.002, 3);
    let mut scratch = BfsScratch::new(g.order());
    c.bench_function("distances/symmetric:7", |b| b.iter(|| scratch.distances(&g, black_box(&closure))));
}

fn monte_carlo(c: &mut Criterion) {
    let (g, _) = fixture("cyclic:4096", 0.0, 0);
    let mut group = c.benchmark_group("estimate_prob");
    group.sample_size(10);
    group.bench_function("cyclic:4096/200 trials", |b| {
        b.iter(|| estimate_prob(&g, 2, black_box(0.032), 200, 7).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bounded_diameter, full_bfs, monte_carlo);
criterion_main!(benches);
