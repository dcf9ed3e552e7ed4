//! Tuples whose signed products over all orderings are pairwise distinct.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::WorkCap;
use crate::error::{Error, Result};
use crate::group::{Elem, Group, IDENTITY};

/// Which family of products must be collision-free.
///
/// With `h_1, …, h_d` an arrangement of `x, g_1, …, g_{d−1}`:
/// * `A`: every permutation, every sign vector (`d!·2^d` products), `x² ≠ 1`.
/// * `B`: every permutation, `x` always with exponent `+1` (`d!·2^{d−1}`), `x² = 1`.
/// * `C`: `x` last, `g`s permuted, every sign vector (`(d−1)!·2^d`), `x² ≠ 1`.
/// * `D`: `x` last with exponent `+1`, `g`s permuted (`(d−1)!·2^{d−1}`), `x² = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductCase {
    A,
    B,
    C,
    D,
}

impl ProductCase {
    fn wants_involution(self) -> bool {
        matches!(self, ProductCase::B | ProductCase::D)
    }

    fn x_last(self) -> bool {
        matches!(self, ProductCase::C | ProductCase::D)
    }

    /// Number of products in the family for walk length `d`.
    pub fn family_size(self, d: u32) -> u64 {
        let fact = |k: u32| (1..=k as u64).product::<u64>();
        let signs = if self.wants_involution() { 1u64 << (d - 1) } else { 1u64 << d };
        let perms = if self.x_last() { fact(d - 1) } else { fact(d) };
        signs * perms
    }
}

impl FromStr for ProductCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(ProductCase::A),
            "b" => Ok(ProductCase::B),
            "c" => Ok(ProductCase::C),
            "d" => Ok(ProductCase::D),
            _ => Err(Error::arg(format!("unknown product case `{s}` (expected a, b, c or d)"))),
        }
    }
}

/// All permutations of `0..k` in lexicographic order.
fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Counts tuples `(g_1, …, g_{d−1})` of distinct elements of `G \ {1, x}`
/// whose case-specific product family has no two equal products.
pub fn distinct_product_tuples(g: &Group, x: Elem, d: u32, case: ProductCase, cap: WorkCap) -> Result<u64> {
    g.check(x)?;
    if x == IDENTITY {
        return Err(Error::arg("x must not be the identity"));
    }
    if d < 2 {
        return Err(Error::arg(format!("walk length d must be at least 2, got {d}")));
    }
    let involution = g.mul(x, x) == IDENTITY;
    if involution != case.wants_involution() {
        return Err(Error::arg(format!(
            "case {case:?} requires x² {} 1",
            if case.wants_involution() { "=" } else { "≠" }
        )));
    }
    let n = g.order();
    let free = n.saturating_sub(2) as f64;
    let tuples: f64 = (0..d - 1).map(|i| free - i as f64).product::<f64>().max(0.0);
    let family = case.family_size(d);
    cap.check("distinct product tuples", tuples * family as f64 * d as f64, "use a smaller group or walk length")?;

    let k = d as usize;
    // slot k − 1 holds x; slots 0..k−1 hold the g's
    let arrangements: Vec<Vec<usize>> = if case.x_last() {
        permutations(k - 1)
            .into_iter()
            .map(|mut p| {
                p.push(k - 1);
                p
            })
            .collect()
    } else {
        permutations(k)
    };
    let candidates: Vec<Elem> = (0..n).filter(|&e| e != IDENTITY && e != x).collect();
    let mut tuple = vec![0usize; k - 1];
    let mut slots = vec![0usize; k];
    slots[k - 1] = x;
    let mut products = Vec::with_capacity(family as usize);
    let mut count = 0u64;
    visit_tuples(&candidates, &mut tuple, 0, &mut |t| {
        slots[..k - 1].copy_from_slice(t);
        products.clear();
        for arr in &arrangements {
            for signs in 0u32..(1 << k) {
                let x_pos = arr.iter().position(|&s| s == k - 1).unwrap();
                if case.wants_involution() && signs >> x_pos & 1 == 1 {
                    continue;
                }
                let prod = arr
                    .iter()
                    .enumerate()
                    .fold(IDENTITY, |acc, (pos, &slot)| g.mul(acc, g.signed(slots[slot], signs >> pos & 1 == 0)));
                products.push(prod);
            }
        }
        debug_assert_eq!(products.len() as u64, family);
        products.sort_unstable();
        if products.windows(2).all(|w| w[0] != w[1]) {
            count += 1;
        }
    });
    Ok(count)
}

fn visit_tuples(candidates: &[Elem], tuple: &mut [Elem], depth: usize, f: &mut impl FnMut(&[Elem])) {
    if depth == tuple.len() {
        f(tuple);
        return;
    }
    for &c in candidates {
        if tuple[..depth].contains(&c) {
            continue;
        }
        tuple[depth] = c;
        visit_tuples(candidates, tuple, depth + 1, f);
    }
}
