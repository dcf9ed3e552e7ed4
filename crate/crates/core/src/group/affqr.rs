//! The affine group of maps x ↦ ax + b over F_p with `a` a nonzero square.
//!
//! Element index is `ai·p + b` where `ai` indexes the sorted list of
//! quadratic residues; residue 1 sorts first, so `f_{1,0}` is index 0.

use crate::error::{Error, Result};
use crate::group::MAX_ORDER;

#[derive(Debug, Clone)]
pub(crate) struct AffQrTables {
    p: u64,
    residues: Vec<u64>,
    // residue value -> index in `residues`, u32::MAX for non-residues
    residue_index: Vec<u32>,
    // residue index -> index of its multiplicative inverse
    residue_inverse: Vec<u32>,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut f = 3u64;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return false;
        }
        f += 2;
    }
    true
}

impl AffQrTables {
    pub(crate) fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::construction(format!("affqr parameter {p} is not prime")));
        }
        if p % 4 != 3 {
            return Err(Error::construction(format!("affqr prime must satisfy p ≡ 3 mod 4, got p ≡ {} mod 4", p % 4)));
        }
        let order = p as u128 * (p as u128 - 1) / 2;
        if order > MAX_ORDER as u128 {
            return Err(Error::construction(format!("affqr:{p} order {order} exceeds {MAX_ORDER}")));
        }
        let mut is_res = vec![false; p as usize];
        for k in 1..p {
            is_res[(k * k % p) as usize] = true;
        }
        let residues: Vec<u64> = (1..p).filter(|&a| is_res[a as usize]).collect();
        let mut residue_index = vec![u32::MAX; p as usize];
        for (i, &a) in residues.iter().enumerate() {
            residue_index[a as usize] = i as u32;
        }
        let residue_inverse = residues
            .iter()
            .map(|&a| {
                let inv = mod_pow(a, p - 2, p);
                residue_index[inv as usize]
            })
            .collect();
        Ok(AffQrTables { p, residues, residue_index, residue_inverse })
    }

    pub(crate) fn order(&self) -> usize {
        self.residues.len() * self.p as usize
    }

    #[inline]
    pub(crate) fn coeffs(&self, g: usize) -> (u64, u64) {
        let p = self.p as usize;
        (self.residues[g / p], (g % p) as u64)
    }

    pub(crate) fn index_of(&self, a: u64, b: u64) -> Option<usize> {
        if a >= self.p || b >= self.p {
            return None;
        }
        let ai = self.residue_index[a as usize];
        (ai != u32::MAX).then(|| ai as usize * self.p as usize + b as usize)
    }

    /// (a1,b1)·(a2,b2) = x ↦ a1(a2 x + b2) + b1.
    #[inline]
    pub(crate) fn mul(&self, g: usize, h: usize) -> usize {
        let p = self.p;
        let (a1, b1) = self.coeffs(g);
        let (a2, b2) = self.coeffs(h);
        let a = a1 * a2 % p;
        let b = (a1 * b2 + b1) % p;
        self.residue_index[a as usize] as usize * p as usize + b as usize
    }

    /// (a,b)⁻¹ = x ↦ a⁻¹x − a⁻¹b.
    #[inline]
    pub(crate) fn inv(&self, g: usize) -> usize {
        let p = self.p;
        let ai = g / p as usize;
        let b = (g % p as usize) as u64;
        let inv_i = self.residue_inverse[ai] as usize;
        let a_inv = self.residues[inv_i];
        let nb = (p - a_inv * b % p) % p;
        inv_i * p as usize + nb as usize
    }
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % m as u128) as u64;
        }
        base = (base as u128 * base as u128 % m as u128) as u64;
        exp >>= 1;
    }
    acc
}
