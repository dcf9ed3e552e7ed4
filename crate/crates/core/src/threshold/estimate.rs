//! Monte Carlo estimates of `Pr(diam Γ ≤ d)` with Wilson score intervals.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bfs::BfsScratch;
use crate::error::{Error, Result};
use crate::group::{Elem, Group};
use crate::rng::Purpose;
use crate::sampler::UniformTable;

/// Two-sided 95% normal quantile.
pub const Z_95: f64 = 1.959_963_984_540_054;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub p: f64,
    pub trials: u64,
    pub successes: u64,
    pub phat: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub seed: u64,
}

impl Estimate {
    pub fn new(p: f64, trials: u64, successes: u64, seed: u64) -> Self {
        let (ci_low, ci_high) = wilson_interval(successes, trials, Z_95);
        Estimate {
            p,
            trials,
            successes,
            phat: if trials == 0 { 0.0 } else { successes as f64 / trials as f64 },
            ci_low,
            ci_high,
            seed,
        }
    }

    /// Half-width of the interval divided by the quantile: a standard
    /// error on the Wilson scale.
    pub fn wilson_sigma(&self) -> f64 {
        (self.ci_high - self.ci_low) / (2.0 * Z_95)
    }
}

/// Wilson score interval for `successes / trials` at normal quantile `z`.
pub fn wilson_interval(successes: u64, trials: u64, z: f64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let phat = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let centre = (phat + z2 / (2.0 * n)) / denom;
    let half = z * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((centre - half).max(0.0).min(phat), (centre + half).min(1.0).max(phat))
}

/// Per-worker buffers for trial evaluation.
pub(crate) struct TrialWorker {
    pub table: UniformTable,
    pub bfs: BfsScratch,
    mark: Vec<bool>,
    closure: Vec<Elem>,
}

impl TrialWorker {
    pub fn new(g: &Group) -> Self {
        TrialWorker {
            table: UniformTable { seed: 0, stream: 0, u: vec![0.0; g.order()] },
            bfs: BfsScratch::new(g.order()),
            mark: vec![false; g.order()],
            closure: Vec::new(),
        }
    }

    pub fn load(&mut self, seed: u64, purpose: Purpose, stream: u64) {
        self.table.refill(seed, purpose, stream);
    }

    /// Diameter ≤ d for the currently loaded table at probability `p`.
    pub fn success(&mut self, g: &Group, d: u32, p: f64) -> bool {
        self.table.closure_into(g, p, &mut self.mark, &mut self.closure);
        self.bfs.diameter_at_most(g, &self.closure, d)
    }
}

pub(crate) fn check_p(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::arg(format!("probability p = {p} is outside [0, 1]")))
    }
}

/// Estimates `Pr(Γ connected and diam Γ ≤ d)` at `p`.
///
/// Trial `i` draws its generating set from stream `i` of `seed`, so the
/// result does not depend on the thread count and estimates at different
/// `p` with the same seed are coupled.
pub fn estimate_prob(g: &Group, d: u32, p: f64, trials: u64, seed: u64) -> Result<Estimate> {
    check_p(p)?;
    if trials == 0 {
        return Err(Error::arg("trials must be at least 1"));
    }
    let successes = (0..trials)
        .into_par_iter()
        .map_init(
            || TrialWorker::new(g),
            |w, trial| {
                w.load(seed, Purpose::Trial, trial);
                u64::from(w.success(g, d, p))
            },
        )
        .sum();
    Ok(Estimate::new(p, trials, successes, seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wilson_known_values() {
        // 10 of 100 at 95%: (0.0552, 0.1744)
        let (lo, hi) = wilson_interval(10, 100, Z_95);
        assert!((lo - 0.05522).abs() < 1e-4, "{lo}");
        assert!((hi - 0.17437).abs() < 1e-4, "{hi}");
        assert_eq!(wilson_interval(0, 10, Z_95).0, 0.0);
        assert_eq!(wilson_interval(10, 10, Z_95).1, 1.0);
    }

    #[test]
    fn interval_brackets_phat() {
        for n in [1u64, 2, 7, 100, 2000] {
            for k in 0..=n.min(50) {
                let e = Estimate::new(0.1, n, k, 0);
                assert!(0.0 <= e.ci_low && e.ci_low <= e.phat && e.phat <= e.ci_high && e.ci_high <= 1.0);
            }
        }
    }

    #[test]
    fn endpoints() {
        let g = Group::from_spec("cyclic:30").unwrap();
        assert_eq!(estimate_prob(&g, 2, 0.0, 200, 1).unwrap().phat, 0.0);
        assert_eq!(estimate_prob(&g, 2, 1.0, 200, 1).unwrap().phat, 1.0);
        assert!(estimate_prob(&g, 2, 1.1, 200, 1).is_err());
        assert!(estimate_prob(&g, 2, 0.5, 0, 1).is_err());
    }

    #[test]
    fn thread_count_invariance() {
        let g = Group::from_spec("dihedral:40").unwrap();
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| estimate_prob(&g, 3, 0.08, 500, 99).unwrap())
        };
        let one = run(1);
        assert_eq!(one, run(3));
        assert_eq!(one, run(8));
        assert!(one.successes > 0 && one.successes < 500);
    }
}
