//! Generating sets for the G(G,p) model and the coupled uniform table.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Elem, Group, IDENTITY};
use crate::rng::{self, Purpose};

/// A sampled set `S` and its inverse-closed, identity-free closure
/// `T = (S ∪ S⁻¹) \ {1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSet {
    /// Sorted; may contain the identity, which has no effect on the graph.
    pub members: Vec<Elem>,
    /// Sorted.
    pub symmetric_closure: Vec<Elem>,
}

impl GenSet {
    /// Builds a generating set from arbitrary member indices.
    pub fn from_members(g: &Group, members: impl IntoIterator<Item = Elem>) -> Result<Self> {
        let mut in_s = vec![false; g.order()];
        for m in members {
            g.check(m)?;
            in_s[m] = true;
        }
        Ok(Self::from_mask(g, &in_s))
    }

    fn from_mask(g: &Group, in_s: &[bool]) -> Self {
        let mut in_t = vec![false; g.order()];
        let mut members = Vec::new();
        for (x, _) in in_s.iter().enumerate().filter(|(_, &b)| b) {
            members.push(x);
            if x != IDENTITY {
                in_t[x] = true;
                in_t[g.inv(x)] = true;
            }
        }
        let symmetric_closure = (0..g.order()).filter(|&x| in_t[x]).collect();
        GenSet { members, symmetric_closure }
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Membership mask over the whole group.
    pub fn member_mask(&self, order: usize) -> Vec<bool> {
        let mut mask = vec![false; order];
        for &m in &self.members {
            mask[m] = true;
        }
        mask
    }
}

fn check_p(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::arg(format!("probability p = {p} is outside [0, 1]")))
    }
}

/// Per-element uniforms `u_g ∈ [0, 1)`. Materializing at `p` keeps exactly
/// the elements with `u_g < p`, so sets are nested as `p` grows.
#[derive(Debug, Clone, PartialEq)]
pub struct UniformTable {
    pub seed: u64,
    pub stream: u64,
    pub u: Vec<f64>,
}

impl UniformTable {
    /// The table for stream 0 of the trial purpose.
    pub fn new(g: &Group, seed: u64) -> Self {
        Self::derive(g, seed, Purpose::Trial, 0)
    }

    pub fn derive(g: &Group, seed: u64, purpose: Purpose, stream: u64) -> Self {
        let mut u = vec![0.0; g.order()];
        rng::fill_uniforms(seed, purpose, stream, &mut u);
        UniformTable { seed, stream, u }
    }

    /// Refills in place for another stream, reusing the allocation.
    pub fn refill(&mut self, seed: u64, purpose: Purpose, stream: u64) {
        self.seed = seed;
        self.stream = stream;
        rng::fill_uniforms(seed, purpose, stream, &mut self.u);
    }

    pub fn materialize(&self, g: &Group, p: f64) -> Result<GenSet> {
        check_p(p)?;
        let mask: Vec<bool> = self.u.iter().map(|&u| u < p).collect();
        Ok(GenSet::from_mask(g, &mask))
    }

    /// Fills `closure` with `T` at probability `p` without building a
    /// [`GenSet`]. `mark` is scratch of length `N`, left all-false.
    pub(crate) fn closure_into(&self, g: &Group, p: f64, mark: &mut [bool], closure: &mut Vec<Elem>) {
        closure.clear();
        for (x, &u) in self.u.iter().enumerate().skip(1) {
            if u < p {
                if !mark[x] {
                    mark[x] = true;
                    closure.push(x);
                }
                let xi = g.inv(x);
                if !mark[xi] {
                    mark[xi] = true;
                    closure.push(xi);
                }
            }
        }
        for &x in closure.iter() {
            mark[x] = false;
        }
    }
}

pub fn coupled_table(g: &Group, seed: u64) -> UniformTable {
    UniformTable::new(g, seed)
}

/// Samples `S` with every element included independently with probability `p`.
pub fn sample_generators(g: &Group, p: f64, seed: u64) -> Result<GenSet> {
    check_p(p)?;
    UniformTable::derive(g, seed, Purpose::Sample, 0).materialize(g, p)
}
