//! Command-line front end.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 statistical failure.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rollout_core::bounds::{BoundCurve, BoundKind};
use rollout_core::{blind_greedy, consecutive_rollout, exhaustive_rollout, Instance, Problem};

use crate::driver::{default_workers, Driver};
use crate::experiments::{self, Algo, Figure, Metric};
use crate::output::{Cell, Table};
use crate::verify::{self, Lemma};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_STAT: i32 = 3;

/// Environment variable that overrides the default master seed.
pub const SEED_ENV: &str = "ROLLOUT_LAB_SEED";
pub const DEFAULT_SEED: u64 = 1;

const TOOL: &str = concat!("rollout-lab ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Parser)]
#[command(name = "rollout-lab", version, about = "Rollout algorithms for stochastic subset sum and knapsack")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProblemArg {
    SubsetSum,
    Knapsack,
}

impl From<ProblemArg> for Problem {
    fn from(p: ProblemArg) -> Self {
        match p {
            ProblemArg::SubsetSum => Problem::SubsetSum,
            ProblemArg::Knapsack => Problem::Knapsack,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgoArg {
    Greedy,
    Consec,
    Exh,
    ConsecFirst,
    ExhFirst,
}

impl From<AlgoArg> for Algo {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Greedy => Algo::Greedy,
            AlgoArg::Consec => Algo::Consec,
            AlgoArg::Exh => Algo::Exh,
            AlgoArg::ConsecFirst => Algo::ConsecFirst,
            AlgoArg::ExhFirst => Algo::ExhFirst,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureArg {
    Consec,
    Exh,
}

impl From<FigureArg> for Figure {
    fn from(f: FigureArg) -> Self {
        match f {
            FigureArg::Consec => Figure::Consec,
            FigureArg::Exh => Figure::Exh,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WhichArg {
    ConsecSs,
    ConsecKp,
    ExhSs,
    ExhSsLog,
    ExhKp,
    ExhKpNoT,
}

impl From<WhichArg> for BoundKind {
    fn from(w: WhichArg) -> Self {
        match w {
            WhichArg::ConsecSs => BoundKind::ConsecSS,
            WhichArg::ConsecKp => BoundKind::ConsecKP,
            WhichArg::ExhSs => BoundKind::ExhSSSum,
            WhichArg::ExhSsLog => BoundKind::ExhSSLog,
            WhichArg::ExhKp => BoundKind::ExhKPFull,
            WhichArg::ExhKpNoT => BoundKind::ExhKPNoT,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LemmaArg {
    GapDist,
    CriticalUniform,
    WkDensity,
    GapGivenWk,
    CondIndep,
}

impl From<LemmaArg> for Lemma {
    fn from(l: LemmaArg) -> Self {
        match l {
            LemmaArg::GapDist => Lemma::GapDist,
            LemmaArg::CriticalUniform => Lemma::CriticalUniform,
            LemmaArg::WkDensity => Lemma::WkDensity,
            LemmaArg::GapGivenWk => Lemma::GapGivenWk,
            LemmaArg::CondIndep => Lemma::CondIndep,
        }
    }
}

fn arg_name<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Estimate the gap (subset sum) or gain over Blind-Greedy (knapsack) of one algorithm.
    Simulate {
        #[arg(long, value_enum)]
        problem: ProblemArg,
        #[arg(long, value_enum)]
        algo: AlgoArg,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value_t = experiments::DEFAULT_TRIALS, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, env = SEED_ENV, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = default_workers() as u64, value_parser = clap::value_parser!(u64).range(1..))]
        workers: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Simulated means next to their bounds, one row per metric and item count.
    Figure {
        #[arg(long, value_enum)]
        name: FigureArg,
        #[arg(long, default_value_t = experiments::DEFAULT_TRIALS, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, env = SEED_ENV, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = default_workers() as u64, value_parser = clap::value_parser!(u64).range(1..))]
        workers: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate a closed-form bound.
    Bounds {
        #[arg(long, value_enum)]
        which: WhichArg,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Goodness-of-fit checks of a distributional result.
    Verify {
        #[arg(long, value_enum)]
        lemma: LemmaArg,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Critical index to condition on (defaults to the middle item).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = experiments::DEFAULT_TRIALS, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, env = SEED_ENV, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = default_workers() as u64, value_parser = clap::value_parser!(u64).range(1..))]
        workers: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quick end-to-end sanity run.
    Selftest {
        #[arg(long, env = SEED_ENV, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = default_workers() as u64, value_parser = clap::value_parser!(u64).range(1..))]
        workers: u64,
    },
}

fn out_flag(out: &Option<PathBuf>) -> String {
    out.as_ref()
        .map(|p| format!(" --out {}", p.display()))
        .unwrap_or_default()
}

impl Command {
    /// Canonical command line recorded at the top of every output file.
    pub fn header(&self) -> String {
        match self {
            Command::Simulate {
                problem,
                algo,
                n,
                trials,
                seed,
                workers,
                out,
            } => format!(
                "{TOOL} simulate --problem {} --algo {} --n {n} --trials {trials} --seed {seed} --workers {workers}{}",
                arg_name(problem),
                arg_name(algo),
                out_flag(out)
            ),
            Command::Figure {
                name,
                trials,
                seed,
                workers,
                out,
            } => format!(
                "{TOOL} figure --name {} --trials {trials} --seed {seed} --workers {workers}{}",
                arg_name(name),
                out_flag(out)
            ),
            Command::Bounds {
                which,
                n_min,
                n_max,
                out,
            } => format!(
                "{TOOL} bounds --which {} --n-min {n_min} --n-max {n_max}{}",
                arg_name(which),
                out_flag(out)
            ),
            Command::Verify {
                lemma,
                n,
                k,
                trials,
                seed,
                workers,
                out,
            } => format!(
                "{TOOL} verify --lemma {} --n {n}{} --trials {trials} --seed {seed} --workers {workers}{} alpha={}",
                arg_name(lemma),
                k.map(|k| format!(" --k {k}")).unwrap_or_default(),
                out_flag(out),
                verify::ALPHA
            ),
            Command::Selftest { seed, workers } => {
                format!("{TOOL} selftest --seed {seed} --workers {workers}")
            }
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Statistical(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io(_) => EXIT_IO,
            CliError::Statistical(_) => EXIT_STAT,
        }
    }
}

pub fn simulate_table(cmd: &Command) -> Table {
    let Command::Simulate {
        problem,
        algo,
        n,
        trials,
        seed,
        workers,
        ..
    } = cmd
    else {
        unreachable!("simulate_table called with {cmd:?}")
    };
    let (problem, algo) = (Problem::from(*problem), Algo::from(*algo));
    let driver = Driver::new(*workers as usize);
    let est = experiments::run_measure(&driver, problem, algo, *n as usize, *trials, *seed);
    let metric = experiments::measure_name(problem, algo);
    let mut table = Table::new(
        &cmd.header(),
        &["metric", "n", "trials", "mean", "stderr", "ci_lo", "ci_hi", "seed"],
    );
    table.row(&[
        Cell::Text(&metric),
        Cell::Int(*n),
        Cell::Int(est.trials),
        Cell::Real(est.mean),
        Cell::Real(est.stderr),
        Cell::Real(est.ci95.0),
        Cell::Real(est.ci95.1),
        Cell::Int(*seed),
    ]);
    table
}

pub fn figure_table(cmd: &Command) -> Result<Table, CliError> {
    let Command::Figure {
        name,
        trials,
        seed,
        workers,
        ..
    } = cmd
    else {
        unreachable!("figure_table called with {cmd:?}")
    };
    let figure = Figure::from(*name);
    let driver = Driver::new(*workers as usize);
    let rows = experiments::figure_data(&driver, figure, figure.default_range(), *trials, *seed)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let mut table = Table::new(&cmd.header(), &["figure", "metric", "n", "mean", "stderr", "bound"]);
    for r in &rows {
        table.row(&[
            Cell::Text(figure.name()),
            Cell::Text(r.metric.name()),
            Cell::Int(r.n as u64),
            Cell::Real(r.simulated.mean),
            Cell::Real(r.simulated.stderr),
            Cell::Real(r.bound),
        ]);
    }
    Ok(table)
}

pub fn bounds_table(cmd: &Command) -> Result<Table, CliError> {
    let Command::Bounds {
        which, n_min, n_max, ..
    } = cmd
    else {
        unreachable!("bounds_table called with {cmd:?}")
    };
    let kind = BoundKind::from(*which);
    if n_min > n_max {
        return Err(CliError::Usage(format!("--n-min {n_min} exceeds --n-max {n_max}")));
    }
    let curve = BoundCurve::tabulate(kind, *n_min..=*n_max).map_err(|e| CliError::Usage(e.to_string()))?;
    let label = arg_name(which);
    let mut table = Table::new(&cmd.header(), &["which", "n", "value"]);
    for (n, v) in curve.points {
        table.row(&[Cell::Text(&label), Cell::Int(n as u64), Cell::Real(v)]);
    }
    Ok(table)
}

/// Runs a verification; the table holds one row per check.
pub fn verify_table(cmd: &Command) -> Result<(verify::Report, Table), CliError> {
    let Command::Verify {
        lemma,
        n,
        k,
        trials,
        seed,
        workers,
        ..
    } = cmd
    else {
        unreachable!("verify_table called with {cmd:?}")
    };
    let driver = Driver::new(*workers as usize);
    let report = verify::verify(&driver, Lemma::from(*lemma), *n as usize, *k, *trials, *seed).map_err(|e| match e {
        verify::StatError::BadCritical { .. } | verify::StatError::TooFewTrials { .. } => CliError::Usage(e.to_string()),
        other => CliError::Statistical(other.to_string()),
    })?;
    let mut table = Table::new(
        &cmd.header(),
        &["lemma", "n", "k", "check", "samples", "statistic", "threshold", "pass"],
    );
    let lemma_name = arg_name(lemma);
    for c in &report.checks {
        table.row(&[
            Cell::Text(&lemma_name),
            Cell::Int(*n),
            Cell::Int(report.k.unwrap_or(0) as u64),
            Cell::Text(&c.name.replace(',', ";")),
            Cell::Int(c.samples),
            Cell::Real(c.statistic),
            Cell::Real(c.threshold),
            Cell::Bool(c.pass),
        ]);
    }
    Ok((report, table))
}

fn selftest(seed: u64, workers: usize) -> Vec<(String, bool)> {
    let mut out = Vec::new();
    let inst = Instance::subset_sum(vec![0.4, 0.5, 0.3], 0.6).expect("valid instance");
    out.push(("blind greedy packs item 1".to_string(), blind_greedy(&inst).packed == vec![0]));
    out.push(("consecutive rollout picks item 2".to_string(), consecutive_rollout(&inst).solution == vec![1]));
    out.push(("exhaustive rollout picks item 2".to_string(), exhaustive_rollout(&inst).solution == vec![1]));
    let b = BoundKind::ConsecSS.evaluate(3).unwrap_or(f64::NAN);
    out.push(("consecutive subset sum bound at n=3 is 7/30".to_string(), (b - 7.0 / 30.0).abs() < 1e-15));
    let driver = Driver::new(workers);
    let e = experiments::run_metric(&driver, Metric::GreedyGap, 5, 20_000, seed);
    out.push((
        format!("greedy gap mean {:.4} within 4 stderr of 1/3", e.mean),
        (e.mean - 1.0 / 3.0).abs() < 4.0 * e.stderr,
    ));
    let chi = verify::chi_square_uniform_critical(&driver, 4, 20_000, seed);
    out.push(("critical index law at n=4".to_string(), chi.map(|c| c.pass).unwrap_or(false)));
    out
}

fn execute(cmd: &Command) -> Result<(), CliError> {
    match cmd {
        Command::Simulate { out, .. } => simulate_table(cmd).write_to(out.as_deref())?,
        Command::Figure { out, .. } => figure_table(cmd)?.write_to(out.as_deref())?,
        Command::Bounds { out, .. } => bounds_table(cmd)?.write_to(out.as_deref())?,
        Command::Verify { out, .. } => {
            let (report, table) = verify_table(cmd)?;
            for c in &report.checks {
                eprintln!("{c}");
            }
            table.write_to(out.as_deref())?;
            if !report.pass() {
                let failed = report.checks.iter().filter(|c| !c.pass).count();
                return Err(CliError::Statistical(format!(
                    "{}: {failed} of {} checks failed",
                    report.lemma.name(),
                    report.checks.len()
                )));
            }
            eprintln!("{}: all {} checks passed", report.lemma.name(), report.checks.len());
        }
        Command::Selftest { seed, workers } => {
            let results = selftest(*seed, *workers as usize);
            for (name, ok) in &results {
                println!("{} {name}", if *ok { "PASS" } else { "FAIL" });
            }
            if results.iter().any(|(_, ok)| !ok) {
                return Err(CliError::Statistical("selftest failed".to_string()));
            }
        }
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("rollout-lab: {e}");
            e.exit_code()
        }
    }
}
