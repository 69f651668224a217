//! Monte Carlo estimates of first-iteration performance, paired with the
//! matching closed-form bounds.
//!
//! Every estimate conditions on the items overflowing the capacity, by
//! rejection inside each trial's own random stream.

use std::fmt;
use std::str::FromStr;

use rollout_core::bounds::{BoundError, BoundKind};
use rollout_core::model::{sample_instance, ModelConfig};
use rollout_core::stats::Estimate;
use rollout_core::{
    blind_greedy, consecutive_rollout, exhaustive_rollout, first_iteration_consecutive,
    first_iteration_exhaustive, Instance, Problem,
};

use crate::driver::{mix_seed, Driver};

/// Default trial count per point.
pub const DEFAULT_TRIALS: u64 = 100_000;

/// Which side of the simulated mean a bound sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// The bound is an upper bound on the mean.
    Upper,
    /// The bound is a lower bound on the mean.
    Lower,
    /// The closed form is the mean itself.
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    ConsecSSGap,
    ConsecKPGain,
    ExhSSGap,
    ExhKPGain,
    GreedyGap,
}

impl Metric {
    pub const ALL: [Metric; 5] = [
        Metric::ConsecSSGap,
        Metric::ConsecKPGain,
        Metric::ExhSSGap,
        Metric::ExhKPGain,
        Metric::GreedyGap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::ConsecSSGap => "consec-ss-gap",
            Metric::ConsecKPGain => "consec-kp-gain",
            Metric::ExhSSGap => "exh-ss-gap",
            Metric::ExhKPGain => "exh-kp-gain",
            Metric::GreedyGap => "greedy-gap",
        }
    }

    pub fn problem(self) -> Problem {
        match self {
            Metric::ConsecKPGain | Metric::ExhKPGain => Problem::Knapsack,
            _ => Problem::SubsetSum,
        }
    }

    pub fn bound(self) -> BoundKind {
        match self {
            Metric::ConsecSSGap => BoundKind::ConsecSS,
            Metric::ConsecKPGain => BoundKind::ConsecKP,
            Metric::ExhSSGap => BoundKind::ExhSSSum,
            Metric::ExhKPGain => BoundKind::ExhKPFull,
            Metric::GreedyGap => BoundKind::GreedyMean,
        }
    }

    pub fn direction(self) -> Direction {
        match self {
            Metric::ConsecSSGap | Metric::ExhSSGap => Direction::Upper,
            Metric::ConsecKPGain | Metric::ExhKPGain => Direction::Lower,
            Metric::GreedyGap => Direction::Exact,
        }
    }

    /// The per-trial quantity on a conditioned instance.
    pub fn evaluate(self, inst: &Instance) -> f64 {
        match self {
            Metric::GreedyGap => blind_greedy(inst).gap,
            Metric::ConsecSSGap => first_iteration_consecutive(inst).min_gap,
            Metric::ConsecKPGain => first_iteration_consecutive(inst).gain,
            Metric::ExhSSGap => first_iteration_exhaustive(inst).min_gap,
            Metric::ExhKPGain => first_iteration_exhaustive(inst).gain,
        }
    }

    fn salt(self) -> u64 {
        Metric::ALL.iter().position(|&m| m == self).unwrap() as u64
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Estimates `metric` for `n` items over `trials` conditioned instances.
pub fn run_metric(driver: &Driver, metric: Metric, n: usize, trials: u64, master_seed: u64) -> Estimate {
    let cfg = ModelConfig::new(n, metric.problem(), true).expect("n >= 1");
    driver.estimate(trials, master_seed, |seed| metric.evaluate(&sample_instance(&cfg, seed)))
}

/// Algorithms that `simulate` can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algo {
    Greedy,
    Consec,
    Exh,
    ConsecFirst,
    ExhFirst,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Greedy => "greedy",
            Algo::Consec => "consec",
            Algo::Exh => "exh",
            Algo::ConsecFirst => "consec-first",
            Algo::ExhFirst => "exh-first",
        }
    }
}

impl FromStr for Algo {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [Algo::Greedy, Algo::Consec, Algo::Exh, Algo::ConsecFirst, Algo::ExhFirst]
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm {s:?}"))
    }
}

/// Name of what [`measure`] reports: the gap for subset sum, the gain over
/// Blind-Greedy for knapsack.
pub fn measure_name(problem: Problem, algo: Algo) -> String {
    let what = match problem {
        Problem::SubsetSum => "gap",
        Problem::Knapsack => "gain",
    };
    format!("{}-{}-{}", algo.name(), problem, what)
}

/// Gap (subset sum) or gain over Blind-Greedy (knapsack) of `algo` on `inst`.
pub fn measure(problem: Problem, algo: Algo, inst: &Instance) -> f64 {
    let full_value = |value: f64| match problem {
        Problem::SubsetSum => inst.capacity() - value,
        Problem::Knapsack => value - blind_greedy(inst).value,
    };
    let first = |gap: f64, gain: f64| match problem {
        Problem::SubsetSum => gap,
        Problem::Knapsack => gain,
    };
    match algo {
        Algo::Greedy => match problem {
            Problem::SubsetSum => blind_greedy(inst).gap,
            Problem::Knapsack => 0.0,
        },
        Algo::Consec => full_value(consecutive_rollout(inst).value),
        Algo::Exh => full_value(exhaustive_rollout(inst).value),
        Algo::ConsecFirst => {
            let s = first_iteration_consecutive(inst);
            first(s.min_gap, s.gain)
        }
        Algo::ExhFirst => {
            let s = first_iteration_exhaustive(inst);
            first(s.min_gap, s.gain)
        }
    }
}

/// Estimates [`measure`] over conditioned instances.
pub fn run_measure(
    driver: &Driver,
    problem: Problem,
    algo: Algo,
    n: usize,
    trials: u64,
    master_seed: u64,
) -> Estimate {
    let cfg = ModelConfig::new(n, problem, true).expect("n >= 1");
    driver.estimate(trials, master_seed, |seed| measure(problem, algo, &sample_instance(&cfg, seed)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Figure {
    Consec,
    Exh,
}

impl Figure {
    pub fn name(self) -> &'static str {
        match self {
            Figure::Consec => "consec",
            Figure::Exh => "exh",
        }
    }

    pub fn metrics(self) -> [Metric; 2] {
        match self {
            Figure::Consec => [Metric::ConsecSSGap, Metric::ConsecKPGain],
            Figure::Exh => [Metric::ExhSSGap, Metric::ExhKPGain],
        }
    }

    /// Item counts plotted by default.
    pub fn default_range(self) -> std::ops::RangeInclusive<usize> {
        match self {
            Figure::Consec => 3..=20,
            Figure::Exh => 2..=50,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigureRow {
    pub figure: Figure,
    pub metric: Metric,
    pub n: usize,
    pub simulated: Estimate,
    pub bound: f64,
}

impl FigureRow {
    /// Whether the simulated mean is on the right side of the bound, allowing
    /// `k` standard errors of slack.
    pub fn consistent(&self, k: f64) -> bool {
        let slack = k * self.simulated.stderr;
        match self.metric.direction() {
            Direction::Upper => self.simulated.mean <= self.bound + slack,
            Direction::Lower => self.simulated.mean >= self.bound - slack,
            Direction::Exact => (self.simulated.mean - self.bound).abs() <= slack,
        }
    }
}

/// Master seed for one point of a figure.
pub fn point_seed(master_seed: u64, metric: Metric, n: usize) -> u64 {
    mix_seed(master_seed, (metric.salt() << 32) | n as u64)
}

/// Simulation and bound for each metric of `figure` at each `n`, metric-major.
pub fn figure_data(
    driver: &Driver,
    figure: Figure,
    ns: std::ops::RangeInclusive<usize>,
    trials: u64,
    master_seed: u64,
) -> Result<Vec<FigureRow>, BoundError> {
    let mut rows = Vec::new();
    for metric in figure.metrics() {
        for n in ns.clone() {
            let bound = metric.bound().evaluate(n)?;
            let simulated = run_metric(driver, metric, n, trials, point_seed(master_seed, metric, n));
            rows.push(FigureRow {
                figure,
                metric,
                n,
                simulated,
                bound,
            });
        }
    }
    Ok(rows)
}
