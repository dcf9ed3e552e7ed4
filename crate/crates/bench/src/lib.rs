//! Shared fixtures for the benchmarks.

use cayley_core::{Group, UniformTable};

/// A group and one coupled table, materialized at `p`.
pub fn fixture(spec: &str, p: f64, seed: u64) -> (Group, Vec<usize>) {
    let g = Group::from_spec(spec).expect("valid family spec");
    let closure = UniformTable::new(&g, seed).materialize(&g, p).expect("p in range").symmetric_closure;
    (g, closure)
}
