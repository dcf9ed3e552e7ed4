//! The δ-dependency graph H on `G \ {1}` and a greedy independent set.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::observations::cross_pair_table;
use super::{all_censuses, WorkCap};
use crate::error::{Error, Result};
use crate::group::{Elem, Group};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DependencyGraph {
    pub delta: f64,
    pub d: u32,
    /// Neighbours of each element, indexed by element; the identity's list
    /// is empty.
    pub adjacency: Vec<Vec<Elem>>,
    /// Vertices kept after dropping `x` with `e_k(x) > N^{k−1+δ}` for some `k`.
    pub filtered: Vec<Elem>,
    /// Greedy independent set of H restricted to `filtered`.
    pub independent_set: Vec<Elem>,
    /// `N^δ`.
    pub window_lhs: f64,
    /// `4^{d+2} d^{d+3}`.
    pub window_rhs: f64,
    /// Whether `N^δ ≥ 4^{d+2} d^{d+3}` and `δ < 1/(4d)`.
    pub window_satisfied: bool,
}

impl DependencyGraph {
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_adjacent(&self, x: Elem, y: Elem) -> bool {
        self.adjacency.get(x).is_some_and(|a| a.binary_search(&y).is_ok())
    }
}

/// Joins `x ≠ y` when, for some `1 ≤ t ≤ r, s ≤ d`, at least
/// `N^{r+s−t−1−δ}` pairs `(e, f)` have `e ∈ E_r(x)`, `f ∈ E_s(y)` and
/// `|e ∩ f| = t`.
pub fn dependency_graph(g: &Group, d: u32, delta: f64, cap: WorkCap) -> Result<DependencyGraph> {
    if !(delta > 0.0) {
        return Err(Error::arg(format!("δ must be positive, got {delta}")));
    }
    let n = g.order();
    let censuses = all_censuses(g, d, cap)?;
    let pair_work: f64 = censuses.iter().map(|c| c.edges.len() as f64).sum::<f64>().powi(2);
    cap.check("dependency graph pair scan", pair_work, "use a smaller group or walk bound")?;

    let nf = n as f64;
    let du = d as usize;
    let adjacent = |a: usize, b: usize| {
        let table = cross_pair_table(&censuses[a], &censuses[b]);
        (1..=du).any(|r| {
            (1..=du).any(|s| {
                (1..=r.min(s)).any(|t| {
                    let threshold = nf.powf((r + s - t) as f64 - 1.0 - delta);
                    table.get(r, s, t) as f64 >= threshold
                })
            })
        })
    };
    let pairs: Vec<(Elem, Elem)> = (1..n)
        .into_par_iter()
        .flat_map_iter(|x| (x + 1..n).map(move |y| (x, y)))
        .filter(|&(x, y)| adjacent(x - 1, y - 1))
        .collect();
    let mut adjacency = vec![Vec::new(); n];
    for (x, y) in pairs {
        adjacency[x].push(y);
        adjacency[y].push(x);
    }
    for a in &mut adjacency {
        a.sort_unstable();
    }

    let filtered: Vec<Elem> = (1..n)
        .filter(|&x| (1..=du).all(|k| censuses[x - 1].e_k(k) as f64 <= nf.powf(k as f64 - 1.0 + delta)))
        .collect();
    let mut taken = vec![false; n];
    let mut independent_set = Vec::new();
    for &x in &filtered {
        if adjacency[x].iter().all(|&y| !taken[y]) {
            taken[x] = true;
            independent_set.push(x);
        }
    }

    let window_lhs = nf.powf(delta);
    let window_rhs = 4f64.powi(d as i32 + 2) * (d as f64).powi(d as i32 + 3);
    Ok(DependencyGraph {
        delta,
        d,
        adjacency,
        filtered,
        independent_set,
        window_lhs,
        window_rhs,
        window_satisfied: window_lhs >= window_rhs && delta < 1.0 / (4.0 * d as f64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::enumerate_edges;

    fn grp(s: &str) -> Group {
        Group::from_spec(s).unwrap()
    }

    #[test]
    fn disjoint_singleton_edges_give_edgeless_graph() {
        // d = 1 in Z_2^n: Γ_x has the single edge {x}, so no pairs intersect
        let g = grp("elem2:3");
        let h = dependency_graph(&g, 1, 0.5, WorkCap::default()).unwrap();
        assert_eq!(h.edge_count(), 0);
        assert_eq!(h.independent_set, (1..8).collect::<Vec<_>>());
        assert!(!h.window_satisfied);
    }

    #[test]
    fn large_delta_keeps_every_vertex_and_joins_any_intersection() {
        // thresholds N^{r+s-t-1-δ} drop below 1, so one intersecting pair suffices
        let g = grp("dihedral:4");
        let h = dependency_graph(&g, 2, 50.0, WorkCap::default()).unwrap();
        assert_eq!(h.filtered, (1..8).collect::<Vec<_>>());
        for x in 1..8 {
            for y in 1..8 {
                if x == y {
                    continue;
                }
                let cx = enumerate_edges(&g, x, 2).unwrap();
                let cy = enumerate_edges(&g, y, 2).unwrap();
                let meet = cx.edges.iter().any(|e| cy.edges.iter().any(|f| e.intersection_len(f) > 0));
                assert_eq!(h.is_adjacent(x, y), meet);
            }
        }
        assert!(!h.independent_set.is_empty());
    }

    #[test]
    fn z5_filter_and_independence() {
        let g = grp("cyclic:5");
        let h = dependency_graph(&g, 2, 0.1, WorkCap::default()).unwrap();
        for &x in &h.independent_set {
            let c = enumerate_edges(&g, x, 2).unwrap();
            for k in 1..=2 {
                assert!(c.e_k(k) as f64 <= 5f64.powf(k as f64 - 1.0 + 0.1));
            }
            for &y in &h.independent_set {
                assert!(!h.is_adjacent(x, y));
            }
        }
        // Every e_1(x) = 4 > 5^{0.1}, so the filter is empty here.
        assert!(h.filtered.is_empty());
    }

    #[test]
    fn adjacency_is_symmetric_and_matches_definition() {
        let g = grp("affqr:7");
        let delta = 0.5;
        let h = dependency_graph(&g, 2, delta, WorkCap::default()).unwrap();
        let n = g.order() as f64;
        for x in 1..g.order() {
            for y in 1..g.order() {
                if x == y {
                    continue;
                }
                assert_eq!(h.is_adjacent(x, y), h.is_adjacent(y, x));
                let cx = enumerate_edges(&g, x, 2).unwrap();
                let cy = enumerate_edges(&g, y, 2).unwrap();
                let mut joined = false;
                for r in 1..=2usize {
                    for s in 1..=2usize {
                        for t in 1..=r.min(s) {
                            let count = cx
                                .edges_of_size(r)
                                .iter()
                                .flat_map(|e| cy.edges_of_size(s).iter().map(move |f| e.intersection_len(f)))
                                .filter(|&i| i == t)
                                .count();
                            joined |= count as f64 >= n.powf((r + s - t) as f64 - 1.0 - delta);
                        }
                    }
                }
                assert_eq!(h.is_adjacent(x, y), joined, "x={x} y={y}");
            }
        }
        assert!(h.independent_set.iter().all(|&x| h.independent_set.iter().all(|&y| !h.is_adjacent(x, y))));
    }

    #[test]
    fn rejects_bad_delta() {
        assert!(dependency_graph(&grp("cyclic:5"), 2, 0.0, WorkCap::default()).is_err());
    }
}
