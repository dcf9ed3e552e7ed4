//! `cayley-lab`: experiments on random Cayley graphs from the command line.
//!
//! Exit codes: 0 on success, 2 on argument or construction errors, 3 when
//! a work cap is exceeded.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use cayley_core::group::audit_conditions;
use cayley_core::hypergraph::{all_censuses, avoidance_sandwich, enumerate_edges_with_cap, o2_bounds};
use cayley_core::threshold::{
    admissible, d_max, find_transition, linear_grid, regime_predictions, sweep, threshold_probability, TransitionConfig,
};
use cayley_core::{
    bfs_distances, sample_generators, Diameter, Elem, Family, GenSet, Group, Regime, ThresholdSpec, WorkCap,
};
use clap::{Args, Parser, Subcommand};

use output::{
    write_csv, write_json, DiameterReport, FormulaReport, FormulaRow, OracleRow, SandwichReport, SweepRow,
    TransitionReport,
};

#[derive(Parser)]
#[command(name = "cayley-lab", version, about = "Random Cayley graph experiments")]
struct Cli {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true, env = "CAYLEY_THREADS")]
    threads: Option<usize>,
    /// Work units an exhaustive enumeration may spend.
    #[arg(long, global = true, default_value_t = WorkCap::default().0)]
    work_cap: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Group spec: cyclic:N, elem2:n, dihedral:m, symmetric:n or affqr:p.
    #[arg(long)]
    family: Family,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Involution and class-size conditions of the special-group regime.
    Audit {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        d: u32,
        #[arg(long, default_value_t = 0.1)]
        epsilon: f64,
    },
    /// Distances from the identity for an explicit or sampled generating set.
    Diameter {
        #[command(flatten)]
        common: Common,
        /// Comma-separated element indices.
        #[arg(long, value_delimiter = ',', conflicts_with = "p", required_unless_present = "p")]
        gens: Option<Vec<Elem>>,
        /// Sample each element independently with this probability.
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value = "0", value_parser = parse_seed)]
        seed: u64,
    },
    /// Edge census of the diameter-d hypergraphs as CSV.
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        d: u32,
        /// Target element; every x ≠ 1 when omitted.
        #[arg(long)]
        x: Option<Elem>,
    },
    /// Exact avoidance probability with its Kleitman and Janson bounds.
    Sandwich {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        d: u32,
        #[arg(long)]
        x: Elem,
        #[arg(long)]
        p: f64,
    },
    /// Estimates of Pr(diam ≤ d) over a grid of probabilities as CSV.
    Sweep {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        d: u32,
        /// Inclusive linear grid start:stop:count.
        #[arg(long, value_parser = parse_grid)]
        p_grid: Grid,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value = "0", value_parser = parse_seed)]
        seed: u64,
        /// Fresh samples at every grid point instead of one coupled table per trial.
        #[arg(long)]
        uncoupled: bool,
    },
    /// Bisection for the p where Pr(diam ≤ d) crosses the target.
    Transition {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        d: u32,
        #[arg(long, default_value_t = 0.0)]
        lo: f64,
        #[arg(long, default_value_t = 1.0)]
        hi: f64,
        #[arg(long, default_value_t = 0.5)]
        target: f64,
        /// Relative bracket width at which bisection stops.
        #[arg(long, default_value_t = 1e-3)]
        rel_tol: f64,
        #[arg(long, default_value_t = 2000)]
        trials: u64,
        #[arg(long, default_value = "0", value_parser = parse_seed)]
        seed: u64,
    },
    /// The six threshold formulas and the admissible walk bound.
    Formulas {
        /// Group whose order is used as N.
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        family: Option<Family>,
        #[arg(long)]
        n: Option<f64>,
        #[arg(long, default_value_t = 2)]
        d: u32,
        #[arg(long, default_value_t = 0.0)]
        epsilon: f64,
        #[arg(long, default_value_t = 0.1)]
        gamma: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum CliError {
    Core(cayley_core::Error),
    Other(String),
}

impl From<cayley_core::Error> for CliError {
    fn from(e: cayley_core::Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn parse_seed(s: &str) -> std::result::Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed {s:?}: {e}"))
}

#[derive(Clone)]
struct Grid(Vec<f64>);

fn parse_grid(s: &str) -> std::result::Result<Grid, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [start, stop, count] = parts.as_slice() else {
        return Err(format!("expected start:stop:count, got {s:?}"));
    };
    let num = |v: &str| v.parse::<f64>().map_err(|e| format!("invalid grid value {v:?}: {e}"));
    let count = count.parse::<usize>().map_err(|e| format!("invalid grid count {count:?}: {e}"))?;
    linear_grid(num(start)?, num(stop)?, count).map(Grid).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot configure {n} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command, WorkCap(cli.work_cap)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_capacity() { 3 } else { 2 })
        }
        Err(CliError::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, cap: WorkCap) -> CliResult<()> {
    match command {
        Command::Audit { common, d, epsilon } => {
            let report = audit_conditions(&Group::new(common.family)?, d, epsilon)?;
            write_json(common.out.as_deref(), &report)
        }
        Command::Diameter { common, gens, p, seed } => {
            let g = &Group::new(common.family)?;
            let set = match (gens, p) {
                (Some(members), _) => GenSet::from_members(g, members)?,
                (None, Some(p)) => sample_generators(g, p, seed)?,
                (None, None) => unreachable!("clap requires --gens or --p"),
            };
            let dist = bfs_distances(g, &set);
            let diameter = match dist.diameter() {
                Diameter::Finite(k) => Some(k),
                Diameter::Disconnected => None,
            };
            // Every vertex has the identity's eccentricity.
            let eccentricity_histogram = diameter.map_or_else(Vec::new, |k| {
                let mut h = vec![0; k as usize + 1];
                h[k as usize] = g.order();
                h
            });
            let report = DiameterReport {
                family: g.family().to_string(),
                n: g.order(),
                p,
                seed: p.map(|_| seed),
                generators: set.members,
                connected: dist.connected,
                diameter,
                eccentricity_histogram,
                distance_histogram: dist.histogram(),
                reachable: dist.reachable_count(),
            };
            write_json(common.out.as_deref(), &report)
        }
        Command::Oracle { common, d, x } => {
            let g = &Group::new(common.family)?;
            let censuses = match x {
                Some(x) => vec![enumerate_edges_with_cap(g, x, d, cap)?],
                None => all_censuses(g, d, cap)?,
            };
            let bounds: Vec<f64> = (1..=d).map(|k| o2_bounds(g, k).tightest()).collect();
            let bounds = &bounds;
            let rows: Vec<OracleRow> = censuses
                .iter()
                .flat_map(|c| {
                    (1..=d).map(move |k| {
                        let e_k = c.e_k(k as usize);
                        let bound_k = bounds[k as usize - 1];
                        OracleRow { x: c.x, k, e_k, bound_k, ratio: e_k as f64 / bound_k }
                    })
                })
                .collect();
            write_csv(common.out.as_deref(), &rows)
        }
        Command::Sandwich { common, d, x, p } => {
            let g = Group::new(common.family)?;
            let s = avoidance_sandwich(&g, x, d, p, cap)?;
            let report = SandwichReport {
                family: g.family().to_string(),
                n: g.order(),
                janson_upper_clipped: s.janson_upper_clipped(),
                holds: s.holds(1e-12),
                sandwich: s,
            };
            write_json(common.out.as_deref(), &report)
        }
        Command::Sweep { common, d, p_grid, trials, seed, uncoupled } => {
            let g = &Group::new(common.family)?;
            let table = sweep(g, d, &p_grid.0, trials, seed, !uncoupled)?;
            let family = g.family();
            let rows: Vec<SweepRow> = table
                .rows
                .iter()
                .map(|e| SweepRow {
                    family: family.name(),
                    params: family.param(),
                    n: g.order(),
                    d,
                    p: e.p,
                    trials: e.trials,
                    successes: e.successes,
                    phat: e.phat,
                    ci_low: e.ci_low,
                    ci_high: e.ci_high,
                    seed: e.seed,
                    coupled: table.coupled,
                })
                .collect();
            write_csv(common.out.as_deref(), &rows)
        }
        Command::Transition { common, d, lo, hi, target, rel_tol, trials, seed } => {
            let g = &Group::new(common.family)?;
            let cfg = TransitionConfig { lo, hi, target, rel_tol, trials_per_probe: trials, seed };
            let t = find_transition(g, d, &cfg)?;
            let report = TransitionReport {
                family: g.family().to_string(),
                n: g.order(),
                d,
                p_star: t.p_star,
                target,
                trials_per_probe: trials,
                seed,
                regime_predictions: regime_predictions(g.order() as f64, d, 0.0)?,
                bracket: t.bracket,
                ci: t.ci,
                probes: t.probes,
                confirmation: t.confirmation,
            };
            write_json(common.out.as_deref(), &report)
        }
        Command::Formulas { family, n, d, epsilon, gamma, out } => {
            let n = match (family, n) {
                (Some(f), _) => Group::new(f)?.order() as f64,
                (None, Some(n)) => n,
                (None, None) => unreachable!("clap requires --family or --n"),
            };
            let thresholds = Regime::ALL
                .iter()
                .map(|&r| {
                    let v = threshold_probability(&ThresholdSpec::new(r, n, d, epsilon))?;
                    Ok(FormulaRow {
                        regime: r.name(),
                        constant: r.constant(d, epsilon),
                        raw: v.raw,
                        p: v.p,
                        clamped: v.clamped,
                    })
                })
                .collect::<CliResult<Vec<_>>>()?;
            // d_N is undefined for N ≤ e^e; report it as absent there.
            let (d_n, is_admissible) = match d_max(n, gamma) {
                Ok(v) => (Some(v), Some(admissible(n, gamma, d)?)),
                Err(_) if n <= std::f64::consts::E.exp() => (None, None),
                Err(e) => return Err(e.into()),
            };
            let report = FormulaReport {
                family: family.map(|f| f.to_string()),
                n,
                d,
                epsilon,
                gamma,
                thresholds,
                d_max: d_n,
                admissible: is_admissible,
            };
            write_json(out.as_deref(), &report)
        }
    }
}
