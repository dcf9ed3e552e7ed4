//! Counting claims about Γ_x checked by exhaustive enumeration.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{all_censuses, census_cost, enumerate_edges_with_cap, EdgeCensus, HyperEdge, WorkCap};
use crate::error::{Error, Result};
use crate::group::{Elem, Family, Group};

fn factorial(k: u32) -> f64 {
    (1..=k).map(f64::from).product()
}

/// `(2k)^{d+1}`: how many targets `x` a fixed k-set can be an edge for.
pub fn o1_bound(k: u32, d: u32) -> f64 {
    (2.0 * k as f64).powi(d as i32 + 1)
}

/// `(2k)^{d+1} N^k`: total k-edges over all Γ_x.
pub fn total_edge_bound(k: u32, d: u32, n: usize) -> f64 {
    o1_bound(k, d) * (n as f64).powi(k as i32)
}

/// The caps on `e_d(x)` that apply to a group.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct O2Bounds {
    /// `2^d N^{d−1}`, any group.
    pub general: f64,
    /// `2^d N^{d−1} / d!`, abelian groups.
    pub abelian: Option<f64>,
    /// `N^{d−1} / d!`, elementary abelian 2-groups.
    pub elem2: Option<f64>,
}

impl O2Bounds {
    /// The tightest applicable cap.
    pub fn tightest(&self) -> f64 {
        self.elem2.or(self.abelian).unwrap_or(self.general)
    }

    pub fn holds(&self, e_d: usize) -> bool {
        let e = e_d as f64;
        e <= self.general && self.abelian.is_none_or(|b| e <= b) && self.elem2.is_none_or(|b| e <= b)
    }
}

/// O2-style caps for edges of size `d` in `g`.
pub fn o2_bounds(g: &Group, d: u32) -> O2Bounds {
    let n = g.order() as f64;
    let general = 2f64.powi(d as i32) * n.powi(d as i32 - 1);
    O2Bounds {
        general,
        abelian: g.is_abelian().then(|| general / factorial(d)),
        elem2: matches!(g.family(), Family::Elem2(_)).then(|| n.powi(d as i32 - 1) / factorial(d)),
    }
}

/// `2^{2d} C(d,i)² i! N^{2d−i−2}`.
pub fn overlap_bound(d: u32, i: u32, n: usize) -> f64 {
    let binom = factorial(d) / (factorial(i) * factorial(d - i));
    4f64.powi(d as i32) * binom * binom * factorial(i) * (n as f64).powi(2 * d as i32 - i as i32 - 2)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct O1Row {
    pub k: u32,
    /// Largest number of targets `x` sharing one k-set as an edge.
    pub max_targets: usize,
    /// A k-set attaining the maximum, if any k-edge exists.
    pub witness: Option<HyperEdge>,
    pub bound: f64,
    /// `Σ_x e_k(x)`.
    pub total_edges: usize,
    pub total_bound: f64,
}

impl O1Row {
    pub fn holds(&self) -> bool {
        self.max_targets as f64 <= self.bound && self.total_edges as f64 <= self.total_bound
    }
}

/// For each `k = 1..=d`, the largest number of `x` for which one k-set is
/// an edge of Γ_x, together with the total k-edge count over all `x`.
pub fn check_o1(g: &Group, d: u32, cap: WorkCap) -> Result<Vec<O1Row>> {
    let censuses = all_censuses(g, d, cap)?;
    Ok(o1_rows(&censuses, d, g.order()))
}

pub(crate) fn o1_rows(censuses: &[EdgeCensus], d: u32, n: usize) -> Vec<O1Row> {
    let mut targets: HashMap<&HyperEdge, usize> = HashMap::new();
    for c in censuses {
        for e in &c.edges {
            *targets.entry(e).or_default() += 1;
        }
    }
    (1..=d)
        .map(|k| {
            let best = targets
                .iter()
                .filter(|(e, _)| e.len() == k as usize)
                .max_by(|a, b| a.1.cmp(b.1).then_with(|| b.0.cmp(a.0)));
            O1Row {
                k,
                max_targets: best.map_or(0, |(_, &c)| c),
                witness: best.map(|(e, _)| (*e).clone()),
                bound: o1_bound(k, d),
                total_edges: censuses.iter().map(|c| c.e_k(k as usize)).sum(),
                total_bound: total_edge_bound(k, d, n),
            }
        })
        .collect()
}

/// `e_d(x)` against the lower-bound scales `N^{d−1}/d!` (any group) and
/// `2^d N^{d−1}/d!` (cyclic, halved when `x = x⁻¹`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct O3Report {
    pub e_d: usize,
    pub general_target: f64,
    pub general_ratio: f64,
    pub cyclic_target: f64,
    pub cyclic_ratio: f64,
    pub x_is_involution: bool,
}

pub fn check_o3(g: &Group, x: Elem, d: u32, cap: WorkCap) -> Result<O3Report> {
    let c = enumerate_edges_with_cap(g, x, d, cap)?;
    Ok(o3_report(g, &c))
}

pub(crate) fn o3_report(g: &Group, c: &EdgeCensus) -> O3Report {
    let d = c.d;
    let n = g.order() as f64;
    let base = n.powi(d as i32 - 1) / factorial(d);
    let involution = g.inv(c.x) == c.x;
    let signs = if involution { d - 1 } else { d };
    let cyclic_target = 2f64.powi(signs as i32) * base;
    let e_d = c.e_k(d as usize);
    O3Report {
        e_d,
        general_target: base,
        general_ratio: e_d as f64 / base,
        cyclic_target,
        cyclic_ratio: e_d as f64 / cyclic_target,
        x_is_involution: involution,
    }
}

/// Ordered pairs `(e, f)` of d-edges of Γ_x with `|e ∩ f| = i`.
pub fn overlap_pairs(g: &Group, x: Elem, d: u32, i: u32, cap: WorkCap) -> Result<usize> {
    if i == 0 || i >= d {
        return Err(Error::arg(format!("overlap size i must satisfy 1 ≤ i ≤ d − 1, got i = {i}, d = {d}")));
    }
    let c = enumerate_edges_with_cap(g, x, d, cap)?;
    Ok(overlap_count(&c, i))
}

pub(crate) fn overlap_count(c: &EdgeCensus, i: u32) -> usize {
    let top = c.edges_of_size(c.d as usize);
    top.par_iter().map(|e| top.iter().filter(|f| e.intersection_len(f) == i as usize).count()).sum()
}

/// Counts `(e, f)` with `e ∈ Γ_x`, `f ∈ Γ_y`, indexed by `(|e|, |f|, |e ∩ f|)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossPairTable {
    d: usize,
    counts: Vec<u64>,
}

impl CrossPairTable {
    fn new(d: usize) -> Self {
        CrossPairTable { d, counts: vec![0; d * d * (d + 1)] }
    }

    fn slot(&self, r: usize, s: usize, t: usize) -> usize {
        ((r - 1) * self.d + (s - 1)) * (self.d + 1) + t
    }

    /// Pairs with `|e| = r`, `|f| = s`, `|e ∩ f| = t`.
    pub fn get(&self, r: usize, s: usize, t: usize) -> u64 {
        if r == 0 || s == 0 || r > self.d || s > self.d || t > r.min(s) {
            return 0;
        }
        self.counts[self.slot(r, s, t)]
    }
}

/// The full `(r, s, t)` table for two censuses with the same walk bound.
pub fn cross_pair_table(cx: &EdgeCensus, cy: &EdgeCensus) -> CrossPairTable {
    let d = cx.d.max(cy.d) as usize;
    let mut table = CrossPairTable::new(d);
    let masks = |c: &EdgeCensus| c.edges.iter().map(|e| e.mask()).collect::<Option<Vec<u128>>>();
    match (masks(cx), masks(cy)) {
        (Some(mx), Some(my)) => {
            for (e, &me) in cx.edges.iter().zip(&mx) {
                for (f, &mf) in cy.edges.iter().zip(&my) {
                    let t = (me & mf).count_ones() as usize;
                    let slot = table.slot(e.len(), f.len(), t);
                    table.counts[slot] += 1;
                }
            }
        }
        _ => {
            for e in &cx.edges {
                for f in &cy.edges {
                    let slot = table.slot(e.len(), f.len(), e.intersection_len(f));
                    table.counts[slot] += 1;
                }
            }
        }
    }
    table
}

/// Pairs `(e, f)`, `e ∈ E_r(x)`, `f ∈ E_s(y)`, with `|e ∩ f| = t`.
#[allow(clippy::too_many_arguments)]
pub fn cross_pairs(g: &Group, x: Elem, y: Elem, d: u32, r: u32, s: u32, t: u32, cap: WorkCap) -> Result<u64> {
    if t == 0 || r == 0 || s == 0 || r > d || s > d {
        return Err(Error::arg(format!("need 1 ≤ t and 1 ≤ r, s ≤ d; got r={r}, s={s}, t={t}, d={d}")));
    }
    if t > r.min(s) {
        return Ok(0);
    }
    cap.check("cross pairs", 2.0 * census_cost(g.order(), d), "use a smaller group or walk bound")?;
    let cx = enumerate_edges_with_cap(g, x, d, cap)?;
    let cy = enumerate_edges_with_cap(g, y, d, cap)?;
    let (er, fs) = (cx.edges_of_size(r as usize), cy.edges_of_size(s as usize));
    Ok(er.iter().map(|e| fs.iter().filter(|f| e.intersection_len(f) == t as usize).count() as u64).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(s: &str) -> Group {
        Group::from_spec(s).unwrap()
    }

    #[test]
    fn o1_z5() {
        let rows = check_o1(&grp("cyclic:5"), 2, WorkCap::default()).unwrap();
        // {g} is an edge for g, −g, 2g, −2g: four distinct targets in Z_5
        assert_eq!(rows[0].max_targets, 4);
        assert!(rows.iter().all(O1Row::holds));
        let c = enumerate_edges_with_cap(&grp("cyclic:5"), 1, 2, WorkCap::default()).unwrap();
        assert!(c.edges_of_size(1).contains(&HyperEdge::new(vec![2])));
    }

    #[test]
    fn o1_klein() {
        let rows = check_o1(&grp("elem2:2"), 2, WorkCap::default()).unwrap();
        assert_eq!(rows[0].max_targets, 1);
        assert!(rows[1].max_targets >= 1);
    }

    #[test]
    fn o3_z5() {
        let r = check_o3(&grp("cyclic:5"), 1, 2, WorkCap::default()).unwrap();
        assert_eq!(r.e_d, 5);
        assert!((r.cyclic_target - 10.0).abs() < 1e-12);
        assert!((r.cyclic_ratio - 0.5).abs() < 1e-12);
        assert!((r.general_ratio - 2.0).abs() < 1e-12);
    }

    #[test]
    fn o3_involution_target_halves() {
        let r = check_o3(&grp("cyclic:8"), 4, 2, WorkCap::default()).unwrap();
        assert!(r.x_is_involution);
        assert!((r.cyclic_target - 2.0 * 8.0 / 2.0).abs() < 1e-12);
    }

    #[test]
    fn overlap_z5() {
        let g = grp("cyclic:5");
        assert_eq!(overlap_pairs(&g, 1, 2, 1, WorkCap::default()).unwrap(), 16);
        assert!((overlap_bound(2, 1, 5) - 320.0).abs() < 1e-9);
        assert_eq!(overlap_pairs(&grp("elem2:2"), 1, 2, 1, WorkCap::default()).unwrap(), 0);
        assert!(overlap_pairs(&g, 1, 2, 0, WorkCap::default()).is_err());
        assert!(overlap_pairs(&g, 1, 2, 2, WorkCap::default()).is_err());
    }

    #[test]
    fn cross_pairs_basics() {
        let g = grp("dihedral:4");
        let cap = WorkCap::default();
        for x in 1..8 {
            let c = enumerate_edges_with_cap(&g, x, 2, cap).unwrap();
            assert_eq!(cross_pairs(&g, x, x, 2, 2, 2, 2, cap).unwrap(), c.e_k(2) as u64);
        }
        assert_eq!(cross_pairs(&g, 1, 2, 2, 1, 2, 2, cap).unwrap(), 0);
        assert!(cross_pairs(&g, 1, 2, 2, 3, 1, 1, cap).is_err());
        assert!(cross_pairs(&g, 1, 2, 2, 1, 1, 0, cap).is_err());
    }

    #[test]
    fn cross_pairs_z5() {
        // E_2(1) = {12,13,23,24,34}; E_2(2) by direct enumeration
        let g = grp("cyclic:5");
        let cap = WorkCap::default();
        let c2 = enumerate_edges_with_cap(&g, 2, 2, cap).unwrap();
        let e2: Vec<Vec<usize>> = c2.edges_of_size(2).iter().map(|e| e.elements.clone()).collect();
        // ±a±b = 2 over distinct nonzero a, b
        assert_eq!(e2, [vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 4], vec![3, 4]]);
        let e1 = [vec![1, 2], vec![1, 3], vec![2, 3], vec![2, 4], vec![3, 4]];
        let expected = e1
            .iter()
            .flat_map(|a| e2.iter().map(move |b| a.iter().filter(|v| b.contains(v)).count()))
            .filter(|&t| t == 1)
            .count() as u64;
        assert_eq!(cross_pairs(&g, 1, 2, 2, 2, 2, 1, cap).unwrap(), expected);
        assert_eq!(expected, 16);
    }

    #[test]
    fn table_matches_direct_counts() {
        let g = grp("affqr:7");
        let cap = WorkCap::default();
        let (x, y) = (3, 10);
        let cx = enumerate_edges_with_cap(&g, x, 3, cap).unwrap();
        let cy = enumerate_edges_with_cap(&g, y, 3, cap).unwrap();
        let table = cross_pair_table(&cx, &cy);
        for r in 1..=3 {
            for s in 1..=3 {
                for t in 1..=3 {
                    assert_eq!(
                        table.get(r, s, t),
                        cross_pairs(&g, x, y, 3, r as u32, s as u32, t as u32, cap).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn o2_bounds_by_family() {
        let b = o2_bounds(&grp("elem2:4"), 3);
        assert_eq!(b.general, 8.0 * 256.0);
        assert_eq!(b.abelian, Some(8.0 * 256.0 / 6.0));
        assert_eq!(b.elem2, Some(256.0 / 6.0));
        let b = o2_bounds(&grp("dihedral:5"), 2);
        assert_eq!(b.abelian, None);
        assert_eq!(b.tightest(), 40.0);
    }
}
