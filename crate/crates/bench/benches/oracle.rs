use cayley_core::group::conjugacy_profile;
use cayley_core::hypergraph::{avoidance_sandwich, enumerate_edges, WorkCap};
use cayley_core::Group;
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn census(c: &mut Criterion) {
    let g = Group::from_spec("dihedral:12").unwrap();
    c.bench_function("enumerate_edges/dihedral:12/d=3", |b| b.iter(|| enumerate_edges(&g, black_box(5), 3).unwrap()));
    let g = Group::from_spec("cyclic:199").unwrap();
    c.bench_function("enumerate_edges/cyclic:199/d=2", |b| b.iter(|| enumerate_edges(&g, black_box(1), 2).unwrap()));
}

fn sandwich(c: &mut Criterion) {
    let g = Group::from_spec("cyclic:12").unwrap();
    c.bench_function("avoidance_sandwich/cyclic:12/d=2", |b| {
        b.iter(|| avoidance_sandwich(&g, black_box(1), 2, 0.3, WorkCap::default()).unwrap())
    });
}

fn profile(c: &mut Criterion) {
    let g = Group::from_spec("affqr:179").unwrap();
    let mut group = c.benchmark_group("conjugacy_profile");
    group.sample_size(10);
    group.bench_function("affqr:179", |b| b.iter(|| conjugacy_profile(black_box(&g)).unwrap()));
    group.finish();
}

criterion_group!(benches, census, sandwich, profile);
criterion_main!(benches);
