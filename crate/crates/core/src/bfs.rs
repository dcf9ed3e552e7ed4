//! Breadth-first search over the implicit Cayley graph.
//!
//! Neighbours of `x` are `x·t` for `t` in the symmetric closure `T`. Left
//! multiplication by any group element is a graph automorphism, so the
//! eccentricity of the identity is the diameter.
//!
//! Each level is expanded either top-down (scan `frontier × T`) or
//! bottom-up (for every unvisited `v`, look for some `v·t` in the
//! frontier), whichever is estimated cheaper.

use serde::{Deserialize, Serialize};

use crate::group::{Elem, Group, IDENTITY};
use crate::sampler::GenSet;

pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMap {
    /// Distance from the identity, or [`UNREACHABLE`].
    pub dist: Vec<u32>,
    /// Largest finite distance.
    pub radius_from_identity: u32,
    pub connected: bool,
}

impl DistanceMap {
    pub fn diameter(&self) -> Diameter {
        if self.connected {
            Diameter::Finite(self.radius_from_identity)
        } else {
            Diameter::Disconnected
        }
    }

    /// `hist[k]` = number of elements at distance `k`.
    pub fn histogram(&self) -> Vec<usize> {
        let mut hist = vec![0usize; self.radius_from_identity as usize + 1];
        for &d in self.dist.iter().filter(|&&d| d != UNREACHABLE) {
            hist[d as usize] += 1;
        }
        hist
    }

    pub fn reachable_count(&self) -> usize {
        self.dist.iter().filter(|&&d| d != UNREACHABLE).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Diameter {
    Finite(u32),
    Disconnected,
}

impl Diameter {
    pub fn at_most(self, d: u32) -> bool {
        matches!(self, Diameter::Finite(k) if k <= d)
    }
}

/// Reusable BFS buffers for one worker.
#[derive(Debug, Clone, Default)]
pub struct BfsScratch {
    visited: Vec<u64>,
    in_frontier: Vec<u64>,
    frontier: Vec<Elem>,
    next: Vec<Elem>,
}

#[inline]
fn test_bit(bits: &[u64], i: usize) -> bool {
    bits[i >> 6] >> (i & 63) & 1 == 1
}

#[inline]
fn set_bit(bits: &mut [u64], i: usize) {
    bits[i >> 6] |= 1 << (i & 63);
}

impl BfsScratch {
    pub fn new(order: usize) -> Self {
        let words = order.div_ceil(64);
        BfsScratch {
            visited: vec![0; words],
            in_frontier: vec![0; words],
            frontier: Vec::with_capacity(order),
            next: Vec::with_capacity(order),
        }
    }

    fn reset(&mut self, order: usize) {
        let words = order.div_ceil(64);
        self.visited.clear();
        self.visited.resize(words, 0);
        self.in_frontier.clear();
        self.in_frontier.resize(words, 0);
        self.frontier.clear();
        self.next.clear();
    }

    /// Whether every element lies within distance `d` of the identity,
    /// i.e. the graph is connected with diameter at most `d`. Stops after
    /// `d` levels.
    pub fn diameter_at_most(&mut self, g: &Group, closure: &[Elem], d: u32) -> bool {
        self.run(g, closure, d, None) == g.order()
    }

    /// Runs at most `max_levels` levels and returns the number of visited
    /// elements. Distances are written to `dist` when given.
    fn run(&mut self, g: &Group, closure: &[Elem], max_levels: u32, mut dist: Option<&mut [u32]>) -> usize {
        let n = g.order();
        self.reset(n);
        set_bit(&mut self.visited, IDENTITY);
        if let Some(dist) = dist.as_deref_mut() {
            dist.fill(UNREACHABLE);
            dist[IDENTITY] = 0;
        }
        self.frontier.push(IDENTITY);
        let mut count = 1usize;
        let mut level = 0u32;
        let degree = closure.len();
        while count < n && !self.frontier.is_empty() && level < max_levels {
            level += 1;
            self.next.clear();
            let unvisited = n - count;
            let top_down = self.frontier.len().saturating_mul(degree);
            let bottom_up = unvisited.saturating_mul(degree.min(n / self.frontier.len() + 1));
            if top_down <= bottom_up {
                for &f in &self.frontier {
                    for &t in closure {
                        let y = g.mul(f, t);
                        if !test_bit(&self.visited, y) {
                            set_bit(&mut self.visited, y);
                            self.next.push(y);
                        }
                    }
                }
            } else {
                for &f in &self.frontier {
                    set_bit(&mut self.in_frontier, f);
                }
                for w in 0..self.visited.len() {
                    let mut free = !self.visited[w];
                    while free != 0 {
                        let v = (w << 6) | free.trailing_zeros() as usize;
                        free &= free - 1;
                        if v >= n {
                            break;
                        }
                        if closure.iter().any(|&t| test_bit(&self.in_frontier, g.mul(v, t))) {
                            self.next.push(v);
                        }
                    }
                }
                for &f in &self.frontier {
                    self.in_frontier[f >> 6] = 0;
                }
                for &v in &self.next {
                    set_bit(&mut self.visited, v);
                }
            }
            if let Some(dist) = dist.as_deref_mut() {
                for &v in &self.next {
                    dist[v] = level;
                }
            }
            count += self.next.len();
            std::mem::swap(&mut self.frontier, &mut self.next);
        }
        count
    }

    pub fn distances(&mut self, g: &Group, closure: &[Elem]) -> DistanceMap {
        let mut dist = vec![UNREACHABLE; g.order()];
        let count = self.run(g, closure, u32::MAX, Some(&mut dist));
        let radius = dist.iter().copied().filter(|&d| d != UNREACHABLE).max().unwrap_or(0);
        DistanceMap { dist, radius_from_identity: radius, connected: count == g.order() }
    }
}

/// Shortest-path distances from the identity.
pub fn bfs_distances(g: &Group, gens: &GenSet) -> DistanceMap {
    BfsScratch::new(g.order()).distances(g, &gens.symmetric_closure)
}

pub fn diameter(g: &Group, gens: &GenSet) -> Diameter {
    bfs_distances(g, gens).diameter()
}

/// Connected with diameter at most `d`, with early exit after `d` levels.
pub fn diameter_at_most(g: &Group, gens: &GenSet, d: u32) -> bool {
    BfsScratch::new(g.order()).diameter_at_most(g, &gens.symmetric_closure, d)
}
