//! Random Cayley graphs in the G(G,p) model.
//!
//! * [`group`]: finite group families with dense indexing, conjugacy data
//!   and the structural audit used by the special-group threshold.
//! * [`sampler`] and [`rng`]: generating sets drawn independently per
//!   element, with a coupled table that nests sets as `p` grows.
//! * [`bfs`]: distances and diameters in the implicit Cayley graph.
//! * [`hypergraph`]: exact enumeration of the diameter-d hypergraphs Γ_x
//!   and the counting checks, inequalities and dependency graph built on them.
//! * [`threshold`]: the six threshold formulas, Monte Carlo estimates,
//!   coupled sweeps and transition search.

// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bfs;
pub mod error;
pub mod group;
pub mod hypergraph;
pub mod rng;
pub mod sampler;
pub mod threshold;

pub use bfs::{bfs_distances, diameter, Diameter, DistanceMap};
pub use error::{Error, Result};
pub use group::{Elem, Family, Group, IDENTITY};
pub use hypergraph::{enumerate_edges, EdgeCensus, HyperEdge, WorkCap};
pub use sampler::{coupled_table, sample_generators, GenSet, UniformTable};
pub use threshold::{estimate_prob, Estimate, Regime, ThresholdSpec};
