//! Threshold probabilities `p = (c · ln N / N^{d−1})^{1/d}` for the six
//! regimes, and the admissible diameter bound `d_N`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// Any group, diameter ≤ d above: `c = d!(1+ε)`.
    GeneralUpper,
    /// Any group, diameter > d below: `c = (1−ε)/2^d`.
    GeneralLower,
    /// Abelian groups, diameter > d below: `c = d!(1−ε)/2^d`.
    AbelianLower,
    /// Z_2^n, diameter > d below: `c = d!(1−ε)`.
    Z2nLower,
    /// Cyclic groups, diameter ≤ d above: `c = d!(1+ε)/2^d`.
    CyclicUpper,
    /// Groups with few involutions and few small classes, diameter ≤ d
    /// above: `c = (1+ε)/2^d`.
    SpecialUpper,
}

impl Regime {
    pub const ALL: [Regime; 6] = [
        Regime::GeneralUpper,
        Regime::GeneralLower,
        Regime::AbelianLower,
        Regime::Z2nLower,
        Regime::CyclicUpper,
        Regime::SpecialUpper,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Regime::GeneralUpper => "general_upper",
            Regime::GeneralLower => "general_lower",
            Regime::AbelianLower => "abelian_lower",
            Regime::Z2nLower => "z2n_lower",
            Regime::CyclicUpper => "cyclic_upper",
            Regime::SpecialUpper => "special_upper",
        }
    }

    pub fn constant(self, d: u32, epsilon: f64) -> f64 {
        let fact: f64 = (1..=d).map(f64::from).product();
        let pow2 = 2f64.powi(d as i32);
        match self {
            Regime::GeneralUpper => fact * (1.0 + epsilon),
            Regime::GeneralLower => (1.0 - epsilon) / pow2,
            Regime::AbelianLower => fact * (1.0 - epsilon) / pow2,
            Regime::Z2nLower => fact * (1.0 - epsilon),
            Regime::CyclicUpper => fact * (1.0 + epsilon) / pow2,
            Regime::SpecialUpper => (1.0 + epsilon) / pow2,
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Regime::ALL.into_iter().find(|r| r.name() == s).ok_or_else(|| Error::arg(format!("unknown regime `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThresholdSpec {
    pub regime: Regime,
    #[serde(rename = "N")]
    pub n: f64,
    pub d: u32,
    pub epsilon: f64,
}

impl ThresholdSpec {
    pub fn new(regime: Regime, n: f64, d: u32, epsilon: f64) -> Self {
        ThresholdSpec { regime, n, d, epsilon }
    }

    pub fn constant(&self) -> f64 {
        self.regime.constant(self.d, self.epsilon)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThresholdValue {
    pub regime: Regime,
    /// Formula value before clamping.
    pub raw: f64,
    /// `min(raw, 1)`.
    pub p: f64,
    /// Set when the formula exceeds 1: N is too small for the regime.
    pub clamped: bool,
}

pub fn threshold_probability(spec: &ThresholdSpec) -> Result<ThresholdValue> {
    if !(spec.n >= 3.0) {
        return Err(Error::arg(format!("threshold formulas need N ≥ 3, got {}", spec.n)));
    }
    if spec.d < 2 {
        return Err(Error::arg(format!("threshold formulas need d ≥ 2, got {}", spec.d)));
    }
    if !(0.0..1.0).contains(&spec.epsilon) {
        return Err(Error::arg(format!("ε must lie in [0, 1), got {}", spec.epsilon)));
    }
    let d = spec.d as f64;
    // in log space so N^{d−1} cannot overflow
    let log_p = (spec.constant().ln() + spec.n.ln().ln() - (d - 1.0) * spec.n.ln()) / d;
    let raw = log_p.exp();
    Ok(ThresholdValue { regime: spec.regime, raw, p: raw.min(1.0), clamped: raw > 1.0 })
}

/// All six formula values, in a fixed key order for JSON output.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegimePredictions {
    pub general_upper: f64,
    pub general_lower: f64,
    pub abelian_lower: f64,
    pub z2n_lower: f64,
    pub cyclic_upper: f64,
    pub special_upper: f64,
}

impl RegimePredictions {
    pub fn get(&self, r: Regime) -> f64 {
        match r {
            Regime::GeneralUpper => self.general_upper,
            Regime::GeneralLower => self.general_lower,
            Regime::AbelianLower => self.abelian_lower,
            Regime::Z2nLower => self.z2n_lower,
            Regime::CyclicUpper => self.cyclic_upper,
            Regime::SpecialUpper => self.special_upper,
        }
    }
}

/// Unclamped formula values for every regime.
pub fn regime_predictions(n: f64, d: u32, epsilon: f64) -> Result<RegimePredictions> {
    let v = |r| threshold_probability(&ThresholdSpec::new(r, n, d, epsilon)).map(|t| t.raw);
    Ok(RegimePredictions {
        general_upper: v(Regime::GeneralUpper)?,
        general_lower: v(Regime::GeneralLower)?,
        abelian_lower: v(Regime::AbelianLower)?,
        z2n_lower: v(Regime::Z2nLower)?,
        cyclic_upper: v(Regime::CyclicUpper)?,
        special_upper: v(Regime::SpecialUpper)?,
    })
}

/// `d_N = (1 − γ) √(ln N / (2 ln ln N))`.
pub fn d_max(n: f64, gamma: f64) -> Result<f64> {
    if !(n > std::f64::consts::E.exp()) {
        return Err(Error::arg(format!("d_N needs N > e^e ≈ 15.15, got {n}")));
    }
    if !(gamma > 0.0 && gamma < 1.0) {
        return Err(Error::arg(format!("γ must lie in (0, 1), got {gamma}")));
    }
    let ln = n.ln();
    Ok((1.0 - gamma) * (ln / (2.0 * ln.ln())).sqrt())
}

/// `2 ≤ d ≤ d_N`.
pub fn admissible(n: f64, gamma: f64, d: u32) -> Result<bool> {
    Ok(d >= 2 && d as f64 <= d_max(n, gamma)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(r: Regime, n: f64, d: u32, eps: f64) -> f64 {
        threshold_probability(&ThresholdSpec::new(r, n, d, eps)).unwrap().p
    }

    #[test]
    fn worked_values() {
        assert!((p(Regime::CyclicUpper, 1e4, 2, 0.0) - (0.5 * 1e4f64.ln() / 1e4).sqrt()).abs() < 1e-15);
        assert!((p(Regime::CyclicUpper, 1e4, 2, 0.0) - 0.02146).abs() < 5e-6);
        assert!((p(Regime::Z2nLower, 16384.0, 2, 0.0) - 0.03442).abs() < 5e-6);
        assert!((p(Regime::GeneralLower, 1e6, 3, 0.0) - 1.20e-4).abs() < 5e-7);
    }

    #[test]
    fn constants() {
        assert_eq!(Regime::GeneralUpper.constant(3, 0.1), 6.0 * 1.1);
        assert_eq!(Regime::GeneralLower.constant(3, 0.1), 0.9 / 8.0);
        assert_eq!(Regime::AbelianLower.constant(3, 0.1), 6.0 * 0.9 / 8.0);
        assert_eq!(Regime::Z2nLower.constant(3, 0.1), 6.0 * 0.9);
        assert_eq!(Regime::CyclicUpper.constant(3, 0.1), 6.0 * 1.1 / 8.0);
        assert_eq!(Regime::SpecialUpper.constant(3, 0.1), 1.1 / 8.0);
    }

    #[test]
    fn clamping() {
        let t = threshold_probability(&ThresholdSpec::new(Regime::GeneralUpper, 3.0, 2, 0.5)).unwrap();
        assert!(t.clamped && t.p == 1.0 && t.raw > 1.0);
        assert!(threshold_probability(&ThresholdSpec::new(Regime::GeneralUpper, 2.0, 2, 0.0)).is_err());
        assert!(threshold_probability(&ThresholdSpec::new(Regime::GeneralUpper, 100.0, 1, 0.0)).is_err());
    }

    #[test]
    fn provable_ordering() {
        for n in [16.0, 1e3, 1e6, 1e12] {
            for d in 2..6 {
                let r = regime_predictions(n, d, 0.0).unwrap();
                assert!(r.z2n_lower > r.cyclic_upper && r.cyclic_upper > r.special_upper);
                assert!(r.general_upper >= r.abelian_lower);
            }
        }
    }

    #[test]
    fn diameter_bound() {
        assert!((d_max(1e6, 0.5).unwrap() - 0.811).abs() < 1e-3);
        assert!(!admissible(1e6, 0.5, 2).unwrap());
        assert!((d_max(1e100, 0.5).unwrap() - 2.30).abs() < 5e-3);
        assert!(admissible(1e100, 0.5, 2).unwrap());
        assert!(d_max(1e100, 0.999999).unwrap() < 1e-5);
        assert!(d_max(15.0, 0.5).is_err());
        assert!(d_max(1e6, 1.0).is_err());
        assert!(d_max(1e6, 0.0).is_err());
    }

    #[test]
    fn regime_names_round_trip() {
        for r in Regime::ALL {
            assert_eq!(r.name().parse::<Regime>().unwrap(), r);
        }
    }
}
