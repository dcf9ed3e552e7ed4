//! Report rows and the CSV / JSON writers.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use cayley_core::hypergraph::Sandwich;
use cayley_core::threshold::RegimePredictions;
use cayley_core::{Elem, Estimate};
use serde::Serialize;

use crate::{CliError, CliResult};

#[derive(Serialize)]
pub struct DiameterReport {
    pub family: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub p: Option<f64>,
    pub seed: Option<u64>,
    pub generators: Vec<Elem>,
    pub connected: bool,
    pub diameter: Option<u32>,
    /// Vertices by eccentricity; empty when disconnected.
    pub eccentricity_histogram: Vec<usize>,
    /// Elements by distance from the identity.
    pub distance_histogram: Vec<usize>,
    pub reachable: usize,
}

#[derive(Serialize)]
pub struct OracleRow {
    pub x: Elem,
    pub k: u32,
    pub e_k: usize,
    pub bound_k: f64,
    pub ratio: f64,
}

#[derive(Serialize)]
pub struct SandwichReport {
    pub family: String,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(flatten)]
    pub sandwich: Sandwich,
    pub janson_upper_clipped: f64,
    pub holds: bool,
}

#[derive(Serialize)]
pub struct SweepRow {
    pub family: &'static str,
    pub params: u64,
    #[serde(rename = "N")]
    pub n: usize,
    pub d: u32,
    pub p: f64,
    pub trials: u64,
    pub successes: u64,
    pub phat: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub seed: u64,
    pub coupled: bool,
}

#[derive(Serialize)]
pub struct TransitionReport {
    pub family: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub d: u32,
    pub p_star: f64,
    pub target: f64,
    pub trials_per_probe: u64,
    pub seed: u64,
    /// Unclamped formula values at ε = 0.
    pub regime_predictions: RegimePredictions,
    pub bracket: (f64, f64),
    pub ci: (f64, f64),
    pub probes: usize,
    pub confirmation: Estimate,
}

#[derive(Serialize)]
pub struct FormulaRow {
    pub regime: &'static str,
    pub constant: f64,
    pub raw: f64,
    pub p: f64,
    pub clamped: bool,
}

#[derive(Serialize)]
pub struct FormulaReport {
    pub family: Option<String>,
    #[serde(rename = "N")]
    pub n: f64,
    pub d: u32,
    pub epsilon: f64,
    pub gamma: f64,
    pub thresholds: Vec<FormulaRow>,
    pub d_max: Option<f64>,
    pub admissible: Option<bool>,
}

fn sink(path: Option<&Path>) -> CliResult<Box<dyn Write>> {
    match path {
        Some(p) => File::create(p)
            .map(|f| Box::new(BufWriter::new(f)) as Box<dyn Write>)
            .map_err(|e| CliError::Other(format!("cannot write {}: {e}", p.display()))),
        None => Ok(Box::new(io::stdout().lock())),
    }
}

fn io_err(e: impl std::fmt::Display) -> CliError {
    CliError::Other(format!("write failed: {e}"))
}

pub fn write_json<T: Serialize>(path: Option<&Path>, value: &T) -> CliResult<()> {
    let mut out = sink(path)?;
    serde_json::to_writer_pretty(&mut out, value).map_err(io_err)?;
    writeln!(out).map_err(io_err)?;
    out.flush().map_err(io_err)
}

pub fn write_csv<T: Serialize>(path: Option<&Path>, rows: &[T]) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(sink(path)?);
    for row in rows {
        w.serialize(row).map_err(io_err)?;
    }
    w.flush().map_err(io_err)
}
