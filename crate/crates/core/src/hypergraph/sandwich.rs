//! Exact avoidance probabilities for Γ_x and the Kleitman / Janson bounds.

use serde::{Deserialize, Serialize};

use super::{enumerate_edges_with_cap, WorkCap};
use crate::error::{Error, Result};
use crate::group::{Elem, Group};
use crate::sampler::GenSet;

/// Largest edge support enumerated exactly.
const MAX_SUPPORT: usize = 26;

/// `Pr(no edge of Γ_x lies inside S)` with its two bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sandwich {
    pub x: Elem,
    pub d: u32,
    pub p: f64,
    pub exact: f64,
    /// `Π_E (1 − p^{|E|})`.
    pub kleitman_lower: f64,
    /// `exp(−Σ_E p^{|E|} + ½ Σ_{E ≠ F, E ∩ F ≠ ∅} p^{|E ∪ F|})`, unclipped.
    pub janson_upper: f64,
    /// `Σ_E p^{|E|}`.
    pub mu: f64,
    /// `Σ_{E ≠ F, E ∩ F ≠ ∅} p^{|E ∪ F|}` over ordered pairs.
    pub delta: f64,
    pub edges: usize,
}

impl Sandwich {
    pub fn janson_upper_clipped(&self) -> f64 {
        self.janson_upper.min(1.0)
    }

    /// `kleitman_lower ≤ exact ≤ min(1, janson_upper)` up to `tol`.
    pub fn holds(&self, tol: f64) -> bool {
        self.kleitman_lower <= self.exact + tol && self.exact <= self.janson_upper_clipped() + tol
    }
}

pub fn avoidance_sandwich(g: &Group, x: Elem, d: u32, p: f64, cap: WorkCap) -> Result<Sandwich> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::arg(format!("probability p = {p} is outside [0, 1]")));
    }
    let census = enumerate_edges_with_cap(g, x, d, cap)?;
    let mut support: Vec<Elem> = census.edges.iter().flat_map(|e| e.elements.iter().copied()).collect();
    support.sort_unstable();
    support.dedup();
    let m = support.len();
    if m > MAX_SUPPORT {
        return Err(Error::Capacity {
            what: "exact avoidance probability",
            cost: 2f64.powi(m as i32),
            cap: 2f64.powi(MAX_SUPPORT as i32),
            hint: "edge support is too large for subset enumeration; use a smaller group".into(),
        });
    }
    cap.check(
        "exact avoidance probability",
        2f64.powi(m as i32) * census.edges.len() as f64,
        "use a smaller group or walk bound",
    )?;
    let local = |e: Elem| support.binary_search(&e).unwrap();
    let masks: Vec<u32> =
        census.edges.iter().map(|e| e.elements.iter().fold(0u32, |acc, &v| acc | 1 << local(v))).collect();

    // avoiding[k] = number of k-subsets of the support containing no edge
    let mut avoiding = vec![0u64; m + 1];
    for r in 0u32..(1u32 << m) {
        if masks.iter().all(|&e| e & !r != 0) {
            avoiding[r.count_ones() as usize] += 1;
        }
    }
    let exact =
        avoiding.iter().enumerate().map(|(k, &c)| c as f64 * p.powi(k as i32) * (1.0 - p).powi((m - k) as i32)).sum();

    let kleitman_lower = masks.iter().map(|e| 1.0 - p.powi(e.count_ones() as i32)).product();
    let mu: f64 = masks.iter().map(|e| p.powi(e.count_ones() as i32)).sum();
    let mut delta = 0.0;
    for (i, &a) in masks.iter().enumerate() {
        for (j, &b) in masks.iter().enumerate() {
            if i != j && a & b != 0 {
                delta += p.powi((a | b).count_ones() as i32);
            }
        }
    }
    Ok(Sandwich {
        x,
        d,
        p,
        exact,
        kleitman_lower,
        janson_upper: (-mu + 0.5 * delta).exp(),
        mu,
        delta,
        edges: masks.len(),
    })
}

/// Whether some edge of Γ_x lies inside `S`, i.e. `x` is within distance
/// `d` of the identity.
pub fn reachable_via_edge(g: &Group, gens: &GenSet, x: Elem, d: u32, cap: WorkCap) -> Result<bool> {
    let census = enumerate_edges_with_cap(g, x, d, cap)?;
    let mask = gens.member_mask(g.order());
    Ok(census.edges.iter().any(|e| e.is_subset_of(&mask)))
}
