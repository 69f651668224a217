//! Goodness-of-fit checks of the distributional results behind the bounds:
//! the greedy gap law, the law of the critical index, and the conditional
//! laws of the weights given the critical index and the gap.

use std::fmt;
use std::str::FromStr;

use rollout_core::bounds::greedy_gap_cdf;
use rollout_core::model::{sample_conditioned_on_critical, sample_instance, ModelConfig};
use rollout_core::stats::{chi_square_statistic, histogram, ks_coefficient, ks_statistic, KS_COEFF_ALPHA_001};
use rollout_core::{blind_greedy, Instance, Problem, SamplingError};
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::driver::{mix_seed, Driver};

/// Significance level of every test, before any Bonferroni split.
pub const ALPHA: f64 = 0.01;
/// Smallest sample a KS test is run on.
pub const MIN_KS_SAMPLES: usize = 100;
/// Smallest trial count for the critical-index chi-square test.
pub const MIN_CHI_SQUARE_TRIALS: u64 = 10_000;
/// Equal-width bins on [0, 1] for conditioning on the gap.
pub const GAP_BINS: usize = 20;
/// Draws allowed per trial when rejection-sampling a critical index.
pub const CRITICAL_BUDGET: u64 = 1_000_000;
/// Allowed distance of the simulated greedy gap mean from 1/3.
pub const GAP_MEAN_TOLERANCE: f64 = 0.005;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum StatError {
    #[error("empty sample")]
    Empty,
    #[error("{got} samples, need at least {min}")]
    TooFewSamples { got: usize, min: usize },
    #[error("{got} trials, need at least {min}")]
    TooFewTrials { got: u64, min: u64 },
    #[error("critical index {k} outside 1..={n}")]
    BadCritical { k: usize, n: usize },
    #[error(transparent)]
    Sampling(#[from] SamplingError),
}

/// Outcome of one hypothesis test.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub samples: u64,
    pub statistic: f64,
    /// Reject when `statistic >= threshold`.
    pub threshold: f64,
    pub alpha: f64,
    pub pass: bool,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: statistic {:.6} vs threshold {:.6} (alpha {:.2e}, {} samples)",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.statistic,
            self.threshold,
            self.alpha,
            self.samples
        )
    }
}

fn ks_with(samples: &mut [f64], cdf: impl Fn(f64) -> f64, coefficient: f64, alpha: f64, name: &str) -> Result<Check, StatError> {
    if samples.is_empty() {
        return Err(StatError::Empty);
    }
    if samples.len() < MIN_KS_SAMPLES {
        return Err(StatError::TooFewSamples {
            got: samples.len(),
            min: MIN_KS_SAMPLES,
        });
    }
    let statistic = ks_statistic(samples, cdf).expect("non-empty");
    let threshold = coefficient / (samples.len() as f64).sqrt();
    Ok(Check {
        name: name.to_string(),
        samples: samples.len() as u64,
        statistic,
        threshold,
        alpha,
        pass: statistic < threshold,
    })
}

/// One-sample KS test at α = 0.01: passes iff `D < 1.63 / sqrt(N)`.
pub fn ks_test(samples: &mut [f64], cdf: impl Fn(f64) -> f64) -> Result<Check, StatError> {
    ks_with(samples, cdf, KS_COEFF_ALPHA_001, ALPHA, "ks")
}

/// KS test at an arbitrary level, using the asymptotic critical value.
pub fn ks_test_at(samples: &mut [f64], cdf: impl Fn(f64) -> f64, alpha: f64, name: &str) -> Result<Check, StatError> {
    ks_with(samples, cdf, ks_coefficient(alpha), alpha, name)
}

fn uniform_cdf(x: f64) -> f64 {
    x.clamp(0.0, 1.0)
}

/// Probabilities of critical index 0 (everything fits), 1, ..., n.
pub fn critical_index_law(n: usize) -> Vec<f64> {
    let mut p = vec![1.0 / (2.0 * n as f64); n + 1];
    p[0] = 0.5;
    p
}

/// Chi-square test of observed critical indices (0..=n, 0 meaning none)
/// against [`critical_index_law`], with `n` degrees of freedom.
pub fn chi_square_critical_index(indices: &[usize], n: usize) -> Check {
    let counts = histogram(indices.iter().copied(), n + 1);
    let statistic = chi_square_statistic(&counts, &critical_index_law(n));
    let threshold = ChiSquared::new(n as f64)
        .expect("positive degrees of freedom")
        .inverse_cdf(1.0 - ALPHA);
    Check {
        name: format!("critical index law, n={n}"),
        samples: indices.len() as u64,
        statistic,
        threshold,
        alpha: ALPHA,
        pass: statistic < threshold,
    }
}

/// Samples unconditioned instances and tests the law of the critical index.
pub fn chi_square_uniform_critical(driver: &Driver, n: usize, trials: u64, master_seed: u64) -> Result<Check, StatError> {
    if trials < MIN_CHI_SQUARE_TRIALS {
        return Err(StatError::TooFewTrials {
            got: trials,
            min: MIN_CHI_SQUARE_TRIALS,
        });
    }
    let cfg = ModelConfig::new(n, Problem::SubsetSum, false)?;
    let indices = driver.collect(trials, master_seed, |seed| {
        blind_greedy(&sample_instance(&cfg, seed)).critical_index()
    });
    Ok(chi_square_critical_index(&indices, n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lemma {
    /// Law of the greedy gap given overflow.
    GapDist,
    /// Law of the critical index.
    CriticalUniform,
    /// Law of the critical weight and of the other weights given the critical index.
    WkDensity,
    /// Gap given the critical weight is uniform on [0, W_k].
    GapGivenWk,
    /// Weights given the critical index and the gap.
    CondIndep,
}

impl Lemma {
    pub const ALL: [Lemma; 5] = [
        Lemma::GapDist,
        Lemma::CriticalUniform,
        Lemma::WkDensity,
        Lemma::GapGivenWk,
        Lemma::CondIndep,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Lemma::GapDist => "gap-dist",
            Lemma::CriticalUniform => "critical-uniform",
            Lemma::WkDensity => "wk-density",
            Lemma::GapGivenWk => "gap-given-wk",
            Lemma::CondIndep => "cond-indep",
        }
    }

    /// Whether the check conditions on a critical index `k`.
    pub fn uses_critical(self) -> bool {
        matches!(self, Lemma::WkDensity | Lemma::GapGivenWk | Lemma::CondIndep)
    }
}

impl FromStr for Lemma {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Lemma::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| format!("unknown lemma {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub lemma: Lemma,
    pub n: usize,
    pub k: Option<usize>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Critical index used when none is given: the middle item.
pub fn default_critical(n: usize) -> usize {
    n.div_ceil(2)
}

/// Instances whose critical index is `k`, one per trial.
pub fn critical_sample(driver: &Driver, n: usize, k: usize, trials: u64, master_seed: u64) -> Result<Vec<Instance>, StatError> {
    if k == 0 || k > n {
        return Err(StatError::BadCritical { k, n });
    }
    let cfg = ModelConfig::new(n, Problem::SubsetSum, false)?;
    driver
        .collect(trials, master_seed, |seed| {
            sample_conditioned_on_critical(&cfg, k, seed, CRITICAL_BUDGET)
        })
        .into_iter()
        .map(|r| r.map_err(StatError::from))
        .collect()
}

fn gap_dist(driver: &Driver, n: usize, trials: u64, seed: u64) -> Result<Vec<Check>, StatError> {
    let cfg = ModelConfig::new(n, Problem::SubsetSum, true)?;
    let mut gaps = driver.collect(trials, seed, |s| blind_greedy(&sample_instance(&cfg, s)).gap);
    let mean = gaps.iter().sum::<f64>() / gaps.len().max(1) as f64;
    let mut law = ks_test(&mut gaps, |g| greedy_gap_cdf(g.clamp(0.0, 1.0)).unwrap())?;
    law.name = format!("gap CDF 2g-g^2, n={n}");
    let mean_check = Check {
        name: format!("gap mean 1/3, n={n}"),
        samples: gaps.len() as u64,
        statistic: (mean - 1.0 / 3.0).abs(),
        threshold: GAP_MEAN_TOLERANCE,
        alpha: f64::NAN,
        pass: (mean - 1.0 / 3.0).abs() < GAP_MEAN_TOLERANCE,
    };
    Ok(vec![law, mean_check])
}

fn wk_density(insts: &[Instance], n: usize, k: usize) -> Result<Vec<Check>, StatError> {
    let mut checks = Vec::new();
    let mut wk: Vec<f64> = insts.iter().map(|i| i.weight(k - 1)).collect();
    checks.push(ks_test_at(&mut wk, |w| uniform_cdf(w).powi(2), ALPHA, &format!("W_{k} CDF w^2"))?);
    let others = n - 1;
    for l in (0..n).filter(|&l| l != k - 1) {
        let mut w: Vec<f64> = insts.iter().map(|i| i.weight(l)).collect();
        checks.push(ks_test_at(
            &mut w,
            uniform_cdf,
            ALPHA / others as f64,
            &format!("W_{} uniform given K={k}", l + 1),
        )?);
    }
    Ok(checks)
}

fn gap_given_wk(insts: &[Instance], k: usize) -> Result<Vec<Check>, StatError> {
    let mut ratio: Vec<f64> = insts
        .iter()
        .map(|i| blind_greedy(i).gap / i.weight(k - 1))
        .collect();
    Ok(vec![ks_test_at(&mut ratio, uniform_cdf, ALPHA, &format!("G/W_{k} uniform"))?])
}

fn cond_indep(insts: &[Instance], n: usize, k: usize) -> Result<Vec<Check>, StatError> {
    // Per gap bin: the rescaled critical weight plus each other weight.
    let mut bins: Vec<Vec<(f64, &Instance)>> = vec![Vec::new(); GAP_BINS];
    for inst in insts {
        let g = blind_greedy(inst).gap;
        let b = ((g * GAP_BINS as f64) as usize).min(GAP_BINS - 1);
        bins[b].push((g, inst));
    }
    let usable: Vec<(usize, &Vec<(f64, &Instance)>)> = bins
        .iter()
        .enumerate()
        .filter(|(_, b)| b.len() >= MIN_KS_SAMPLES)
        .collect();
    let tests = (usable.len() * n).max(1);
    let alpha = ALPHA / tests as f64;
    let mut checks = Vec::new();
    for (b, members) in usable {
        let lo = b as f64 / GAP_BINS as f64;
        let hi = (b + 1) as f64 / GAP_BINS as f64;
        let mut wk: Vec<f64> = members
            .iter()
            .map(|(g, i)| (i.weight(k - 1) - g) / (1.0 - g))
            .collect();
        checks.push(ks_test_at(
            &mut wk,
            uniform_cdf,
            alpha,
            &format!("W_{k} uniform on [g,1], g in [{lo:.2},{hi:.2})"),
        )?);
        for l in (0..n).filter(|&l| l != k - 1) {
            let mut w: Vec<f64> = members.iter().map(|(_, i)| i.weight(l)).collect();
            checks.push(ks_test_at(
                &mut w,
                uniform_cdf,
                alpha,
                &format!("W_{} uniform, g in [{lo:.2},{hi:.2})", l + 1),
            )?);
        }
    }
    Ok(checks)
}

/// Runs the checks for `lemma`. `k` defaults to [`default_critical`].
pub fn verify(
    driver: &Driver,
    lemma: Lemma,
    n: usize,
    k: Option<usize>,
    trials: u64,
    master_seed: u64,
) -> Result<Report, StatError> {
    let seed = mix_seed(master_seed, lemma as u64);
    let (k, checks) = match lemma {
        Lemma::GapDist => (None, gap_dist(driver, n, trials, seed)?),
        Lemma::CriticalUniform => (None, vec![chi_square_uniform_critical(driver, n, trials, seed)?]),
        _ => {
            let k = k.unwrap_or_else(|| default_critical(n));
            let insts = critical_sample(driver, n, k, trials, seed)?;
            let checks = match lemma {
                Lemma::WkDensity => wk_density(&insts, n, k)?,
                Lemma::GapGivenWk => gap_given_wk(&insts, k)?,
                _ => cond_indep(&insts, n, k)?,
            };
            (Some(k), checks)
        }
    };
    Ok(Report { lemma, n, k, checks })
}
