//! Threshold formulas and Monte Carlo location of diameter transitions.

mod estimate;
mod formulas;
mod sweep;
mod transition;

pub use estimate::{estimate_prob, wilson_interval, Estimate, Z_95};
pub use formulas::{
    admissible, d_max, regime_predictions, threshold_probability, Regime, RegimePredictions, ThresholdSpec,
    ThresholdValue,
};
pub use sweep::{linear_grid, sweep, SweepTable};
pub use transition::{find_transition, Transition, TransitionConfig};
