//! Exact enumeration of the diameter-d hypergraphs Γ_x.
//!
//! A set `E ⊆ G \ {1}` is an edge of Γ_x when some signed product
//! `h_1^{a_1} ⋯ h_ℓ^{a_ℓ} = x` with `|E| ≤ ℓ ≤ d` uses exactly the
//! elements of `E` (repetitions allowed). Edges of size `k` are k-edges;
//! `e_k(x)` counts them.
//!
//! Enumeration walks every choice of the first `ℓ − 1` factors and signs and
//! solves for the last factor, so the work per census is
//! `Σ_ℓ 2^ℓ (N−1)^{ℓ−1}`. All operations here are exhaustive and intended
//! for small groups; they fail fast with a cost estimate when a
//! [`WorkCap`] would be exceeded.

mod dependency;
mod observations;
mod products;
mod sandwich;

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Elem, Group, IDENTITY};

pub use dependency::{dependency_graph, DependencyGraph};
pub use observations::{
    check_o1, check_o3, cross_pair_table, cross_pairs, o1_bound, o2_bounds, overlap_bound, overlap_pairs,
    total_edge_bound, CrossPairTable, O1Row, O2Bounds, O3Report,
};
pub use products::{distinct_product_tuples, ProductCase};
pub use sandwich::{avoidance_sandwich, reachable_via_edge, Sandwich};

/// Upper bound on work units an exhaustive operation may spend.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WorkCap(pub f64);

impl Default for WorkCap {
    fn default() -> Self {
        WorkCap(1e8)
    }
}

impl WorkCap {
    pub(crate) fn check(self, what: &'static str, cost: f64, hint: &str) -> Result<()> {
        if cost <= self.0 {
            Ok(())
        } else {
            Err(Error::Capacity { what, cost, cap: self.0, hint: hint.to_string() })
        }
    }
}

/// An edge of Γ_x: sorted, distinct, non-identity elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HyperEdge {
    pub elements: Vec<Elem>,
}

impl HyperEdge {
    pub fn new(mut elements: Vec<Elem>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        HyperEdge { elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `|self ∩ other|` by merging the sorted lists.
    pub fn intersection_len(&self, other: &HyperEdge) -> usize {
        let (a, b) = (&self.elements, &other.elements);
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }

    pub fn is_subset_of(&self, mask: &[bool]) -> bool {
        self.elements.iter().all(|&e| mask[e])
    }

    /// Bit `e − 1` set for each element `e`; `None` if any index exceeds 128.
    pub fn mask(&self) -> Option<u128> {
        self.elements.iter().try_fold(0u128, |m, &e| (1..=128).contains(&e).then(|| m | 1u128 << (e - 1)))
    }
}

/// All edges of Γ_x for walk bound `d`, grouped by size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCensus {
    pub x: Elem,
    pub d: u32,
    /// `e[k − 1] = e_k(x)` for `k = 1..=d`.
    pub e: Vec<usize>,
    /// Sorted by size, then lexicographically.
    pub edges: Vec<HyperEdge>,
}

impl EdgeCensus {
    pub fn e_k(&self, k: usize) -> usize {
        if k == 0 || k > self.e.len() {
            0
        } else {
            self.e[k - 1]
        }
    }

    /// `E_k(x)`.
    pub fn edges_of_size(&self, k: usize) -> &[HyperEdge] {
        if k == 0 || k > self.e.len() {
            return &[];
        }
        let start: usize = self.e[..k - 1].iter().sum();
        &self.edges[start..start + self.e[k - 1]]
    }
}

/// Work units for one census: `Σ_{ℓ=1}^{d} 2^ℓ (N−1)^{ℓ−1}`.
pub fn census_cost(n: usize, d: u32) -> f64 {
    let m = n.saturating_sub(1) as f64;
    (1..=d).map(|l| 2f64.powi(l as i32) * m.powi(l as i32 - 1)).sum()
}

fn check_target(g: &Group, x: Elem) -> Result<()> {
    g.check(x)?;
    if x == IDENTITY {
        return Err(Error::arg("Γ_x is defined for x ≠ 1"));
    }
    Ok(())
}

pub fn enumerate_edges(g: &Group, x: Elem, d: u32) -> Result<EdgeCensus> {
    enumerate_edges_with_cap(g, x, d, WorkCap::default())
}

pub fn enumerate_edges_with_cap(g: &Group, x: Elem, d: u32, cap: WorkCap) -> Result<EdgeCensus> {
    check_target(g, x)?;
    if d == 0 {
        return Err(Error::arg("walk bound d must be at least 1"));
    }
    cap.check("edge enumeration", census_cost(g.order(), d), "use a smaller group or walk bound")?;
    Ok(census_unchecked(g, x, d))
}

/// Censuses for every `x ≠ 1`, indexed by `x − 1`. Runs in parallel over `x`.
pub fn all_censuses(g: &Group, d: u32, cap: WorkCap) -> Result<Vec<EdgeCensus>> {
    if d == 0 {
        return Err(Error::arg("walk bound d must be at least 1"));
    }
    let n = g.order();
    cap.check(
        "edge enumeration over all x",
        census_cost(n, d) * n.saturating_sub(1) as f64,
        "use a smaller group or walk bound",
    )?;
    Ok((1..n).into_par_iter().map(|x| census_unchecked(g, x, d)).collect())
}

fn census_unchecked(g: &Group, x: Elem, d: u32) -> EdgeCensus {
    let mut found: HashSet<Vec<Elem>> = HashSet::new();
    let mut stack = Vec::with_capacity(d as usize);
    for len in 1..=d as usize {
        extend_walks(g, x, len, IDENTITY, &mut stack, &mut found);
    }
    let mut edges: Vec<HyperEdge> = found.into_iter().map(|elements| HyperEdge { elements }).collect();
    edges.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.elements.cmp(&b.elements)));
    let mut e = vec![0usize; d as usize];
    for edge in &edges {
        e[edge.len() - 1] += 1;
    }
    EdgeCensus { x, d, e, edges }
}

/// Chooses factors for the remaining positions of a product of length
/// `len`; `prefix` is the product so far and `stack` the factors used.
fn extend_walks(g: &Group, x: Elem, len: usize, prefix: Elem, stack: &mut Vec<Elem>, found: &mut HashSet<Vec<Elem>>) {
    if stack.len() + 1 == len {
        // h^a = prefix⁻¹ x for the final factor
        let rest = g.mul(g.inv(prefix), x);
        if rest == IDENTITY {
            return;
        }
        for h in [rest, g.inv(rest)] {
            let mut set = stack.clone();
            set.push(h);
            set.sort_unstable();
            set.dedup();
            found.insert(set);
        }
        return;
    }
    for h in 1..g.order() {
        for positive in [true, false] {
            stack.push(h);
            extend_walks(g, x, len, g.mul(prefix, g.signed(h, positive)), stack, found);
            stack.pop();
        }
    }
}
