//! Estimates over a grid of probabilities, optionally coupled.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::estimate::{check_p, Estimate, TrialWorker};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::rng::Purpose;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepTable {
    pub d: u32,
    pub coupled: bool,
    pub rows: Vec<Estimate>,
    /// `indicators[trial][grid index]`: whether that trial succeeded.
    pub indicators: Vec<Vec<bool>>,
}

impl SweepTable {
    /// Trials whose success indicator drops somewhere along the grid. Always
    /// zero for coupled sweeps.
    pub fn monotonicity_violations(&self) -> usize {
        self.indicators.iter().filter(|row| row.windows(2).any(|w| w[0] && !w[1])).count()
    }
}

/// Inclusive linear grid `start, …, stop` with `count` points.
pub fn linear_grid(start: f64, stop: f64, count: usize) -> Result<Vec<f64>> {
    if count == 0 {
        return Err(Error::arg("grid needs at least one point"));
    }
    if count == 1 {
        if start != stop {
            return Err(Error::arg("a one-point grid needs start = stop"));
        }
        return Ok(vec![start]);
    }
    let step = (stop - start) / (count - 1) as f64;
    Ok((0..count).map(|i| if i + 1 == count { stop } else { start + step * i as f64 }).collect())
}

/// Runs `trials` trials at every grid point.
///
/// Coupled: trial `i` keeps one uniform table (stream `i` of `seed`) for
/// the whole grid, so its generating sets are nested and its indicator is
/// non-decreasing in `p`. Uncoupled: each grid point uses fresh streams.
pub fn sweep(g: &Group, d: u32, grid: &[f64], trials: u64, seed: u64, coupled: bool) -> Result<SweepTable> {
    if grid.is_empty() {
        return Err(Error::arg("p-grid is empty"));
    }
    for &p in grid {
        check_p(p)?;
    }
    if grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::arg("p-grid must be sorted ascending"));
    }
    if trials == 0 {
        return Err(Error::arg("trials must be at least 1"));
    }
    let indicators: Vec<Vec<bool>> = (0..trials)
        .into_par_iter()
        .map_init(
            || TrialWorker::new(g),
            |w, trial| {
                if coupled {
                    w.load(seed, Purpose::Trial, trial);
                }
                grid.iter()
                    .enumerate()
                    .map(|(j, &p)| {
                        if !coupled {
                            w.load(seed, Purpose::Uncoupled, j as u64 * trials + trial);
                        }
                        w.success(g, d, p)
                    })
                    .collect()
            },
        )
        .collect();
    let rows = grid
        .iter()
        .enumerate()
        .map(|(j, &p)| {
            let successes = indicators.iter().filter(|row| row[j]).count() as u64;
            Estimate::new(p, trials, successes, seed)
        })
        .collect();
    Ok(SweepTable { d, coupled, rows, indicators })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::threshold::estimate_prob;

    #[test]
    fn grid_syntax() {
        assert_eq!(linear_grid(0.0, 1.0, 3).unwrap(), [0.0, 0.5, 1.0]);
        let g = linear_grid(0.010, 0.040, 16).unwrap();
        assert_eq!(g.len(), 16);
        assert_eq!(g[15], 0.040);
        assert!(linear_grid(0.0, 1.0, 0).is_err());
    }

    #[test]
    fn endpoints_grid() {
        let g = Group::from_spec("affqr:11").unwrap();
        let t = sweep(&g, 2, &[0.0, 1.0], 50, 3, true).unwrap();
        assert_eq!(t.rows[0].phat, 0.0);
        assert_eq!(t.rows[1].phat, 1.0);
    }

    #[test]
    fn rejects_unsorted_grid() {
        let g = Group::from_spec("cyclic:10").unwrap();
        assert!(sweep(&g, 2, &[0.5, 0.2], 10, 0, true).is_err());
        assert!(sweep(&g, 2, &[0.2, 1.5], 10, 0, true).is_err());
    }

    #[test]
    fn coupled_rows_match_point_estimates() {
        let g = Group::from_spec("cyclic:200").unwrap();
        let grid = [0.1, 0.15, 0.2];
        let t = sweep(&g, 2, &grid, 300, 11, true).unwrap();
        assert_eq!(t.monotonicity_violations(), 0);
        for (row, &p) in t.rows.iter().zip(&grid) {
            assert_eq!(row.successes, estimate_prob(&g, 2, p, 300, 11).unwrap().successes);
        }
    }

    #[test]
    fn uncoupled_sweep_runs() {
        let g = Group::from_spec("cyclic:200").unwrap();
        let t = sweep(&g, 2, &[0.1, 0.12, 0.14, 0.16], 300, 11, false).unwrap();
        assert!(!t.coupled);
        assert_eq!(t.rows.len(), 4);
    }
}
