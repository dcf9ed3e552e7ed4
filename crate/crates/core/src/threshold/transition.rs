//! Bisection for the probability where `Pr(diam ≤ d)` crosses a target.
//!
//! Every probe at probability `p` reuses trial streams `0..trials` of the
//! same seed, so the success count is a non-decreasing step function of
//! `p` and the bisection is deterministic.

use serde::{Deserialize, Serialize};

use super::estimate::{estimate_prob, Estimate};
use crate::error::{Error, Result};
use crate::group::Group;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransitionConfig {
    /// Initial bracket; must satisfy `phat(lo) < target ≤ phat(hi)`.
    pub lo: f64,
    pub hi: f64,
    pub target: f64,
    /// Stop once `hi − lo ≤ rel_tol · hi`.
    pub rel_tol: f64,
    pub trials_per_probe: u64,
    pub seed: u64,
}

impl TransitionConfig {
    pub fn new(lo: f64, hi: f64, seed: u64) -> Self {
        TransitionConfig { lo, hi, target: 0.5, rel_tol: 1e-3, trials_per_probe: 2000, seed }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Transition {
    /// Midpoint of the final bracket.
    pub p_star: f64,
    pub bracket: (f64, f64),
    /// Probabilities where the probe's Wilson interval still contains the
    /// target: below `ci.0` the whole interval is under it, above `ci.1`
    /// the whole interval is over it.
    pub ci: (f64, f64),
    /// Estimate at `p_star` with four times the per-probe budget.
    pub confirmation: Estimate,
    pub probes: usize,
}

impl Transition {
    /// Whether the confirmation interval contains the target.
    pub fn confirmed(&self, target: f64) -> bool {
        self.confirmation.ci_low <= target && target <= self.confirmation.ci_high
    }
}

/// Smallest `p` in `[lo, hi]` (to `rel_tol`) where `pred` turns true,
/// given `pred(lo) = false`, `pred(hi) = true`, and monotonicity.
fn bisect(
    mut lo: f64,
    mut hi: f64,
    rel_tol: f64,
    probes: &mut usize,
    mut pred: impl FnMut(f64) -> Result<bool>,
) -> Result<(f64, f64)> {
    while hi - lo > rel_tol * hi {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        *probes += 1;
        if pred(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok((lo, hi))
}

pub fn find_transition(g: &Group, d: u32, cfg: &TransitionConfig) -> Result<Transition> {
    if !(cfg.target > 0.0 && cfg.target < 1.0) {
        return Err(Error::arg(format!("target must lie in (0, 1), got {}", cfg.target)));
    }
    if !(cfg.rel_tol > 0.0) {
        return Err(Error::arg("tolerance must be positive"));
    }
    if !(0.0 <= cfg.lo && cfg.lo < cfg.hi && cfg.hi <= 1.0) {
        return Err(Error::arg(format!("bracket [{}, {}] must satisfy 0 ≤ lo < hi ≤ 1", cfg.lo, cfg.hi)));
    }
    let probe = |p: f64| estimate_prob(g, d, p, cfg.trials_per_probe, cfg.seed);
    let (at_lo, at_hi) = (probe(cfg.lo)?, probe(cfg.hi)?);
    if !(at_lo.phat < cfg.target && at_hi.phat >= cfg.target) {
        return Err(Error::arg(format!(
            "bracket does not straddle the target {}: phat({}) = {}, phat({}) = {}; widen the bounds",
            cfg.target, cfg.lo, at_lo.phat, cfg.hi, at_hi.phat
        )));
    }
    let mut probes = 2;
    let bracket = bisect(cfg.lo, cfg.hi, cfg.rel_tol, &mut probes, |p| Ok(probe(p)?.phat >= cfg.target))?;
    let p_star = 0.5 * (bracket.0 + bracket.1);

    let ci_low = if at_lo.ci_high >= cfg.target {
        cfg.lo
    } else {
        bisect(cfg.lo, bracket.1, cfg.rel_tol, &mut probes, |p| Ok(probe(p)?.ci_high >= cfg.target))?.0
    };
    let ci_high = if at_hi.ci_low <= cfg.target {
        cfg.hi
    } else {
        bisect(bracket.0, cfg.hi, cfg.rel_tol, &mut probes, |p| Ok(probe(p)?.ci_low > cfg.target))?.1
    };

    let confirmation = estimate_prob(g, d, p_star, 4 * cfg.trials_per_probe, cfg.seed)?;
    Ok(Transition { p_star, bracket, ci: (ci_low, ci_high), confirmation, probes: probes + 1 })
}
