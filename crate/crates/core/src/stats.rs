//! Streaming moments and goodness-of-fit statistics.

use alloc::vec::Vec;

/// Welford accumulator for mean and variance.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Moments {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    /// Combines two accumulators (Chan et al. pairwise update).
    pub fn merge(&mut self, other: &Moments) {
        if other.count == 0 {
            return;
        }
        if self.count == 0 {
            *self = *other;
            return;
        }
        let total = self.count + other.count;
        let delta = other.mean - self.mean;
        let weight = other.count as f64 / total as f64;
        self.mean += delta * weight;
        self.m2 += other.m2 + delta * delta * self.count as f64 * weight;
        self.count = total;
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    /// Unbiased sample variance; zero with fewer than two observations.
    pub fn variance(&self) -> f64 {
        if self.count < 2 {
            0.0
        } else {
            self.m2 / (self.count - 1) as f64
        }
    }

    pub fn estimate(&self) -> Estimate {
        let stderr = if self.count == 0 {
            0.0
        } else {
            libm::sqrt(self.variance() / self.count as f64)
        };
        Estimate::new(self.mean, stderr, self.count)
    }
}

impl Extend<f64> for Moments {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for x in iter {
            self.push(x);
        }
    }
}

impl FromIterator<f64> for Moments {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut m = Moments::new();
        m.extend(iter);
        m
    }
}

/// Monte Carlo summary of one quantity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub mean: f64,
    pub stderr: f64,
    pub trials: u64,
    /// `mean ± 1.96 stderr`.
    pub ci95: (f64, f64),
}

impl Estimate {
    pub fn new(mean: f64, stderr: f64, trials: u64) -> Self {
        let half = 1.96 * stderr;
        Self {
            mean,
            stderr,
            trials,
            ci95: (mean - half, mean + half),
        }
    }
}

/// Asymptotic one-sample KS coefficient at α = 0.01: reject when
/// `D >= KS_COEFF_ALPHA_001 / sqrt(N)`.
pub const KS_COEFF_ALPHA_001: f64 = 1.63;

/// Asymptotic KS coefficient `sqrt(-ln(α/2) / 2)` for a general level.
pub fn ks_coefficient(alpha: f64) -> f64 {
    libm::sqrt(-libm::log(alpha / 2.0) / 2.0)
}

/// One-sample Kolmogorov-Smirnov distance between the empirical CDF of
/// `samples` and `cdf`. Sorts `samples` in place. Returns `None` when empty.
pub fn ks_statistic<F>(samples: &mut [f64], cdf: F) -> Option<f64>
where
    F: Fn(f64) -> f64,
{
    if samples.is_empty() {
        return None;
    }
    samples.sort_by(f64::total_cmp);
    let n = samples.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in samples.iter().enumerate() {
        let f = cdf(x);
        let below = i as f64 / n;
        let above = (i + 1) as f64 / n;
        d = d.max(above - f).max(f - below);
    }
    Some(d)
}

/// Pearson chi-square statistic of `observed` counts against `probabilities`.
///
/// Cells with zero expected probability are skipped; they contribute only if
/// something was observed there, in which case the result is infinite.
pub fn chi_square_statistic(observed: &[u64], probabilities: &[f64]) -> f64 {
    let total: u64 = observed.iter().sum();
    let total = total as f64;
    observed
        .iter()
        .zip(probabilities)
        .map(|(&o, &p)| {
            let expected = total * p;
            if expected == 0.0 {
                if o == 0 {
                    0.0
                } else {
                    f64::INFINITY
                }
            } else {
                let d = o as f64 - expected;
                d * d / expected
            }
        })
        .sum()
}

/// Counts of each value in `0..bins`; values outside are ignored.
pub fn histogram<I: IntoIterator<Item = usize>>(values: I, bins: usize) -> Vec<u64> {
    let mut counts = alloc::vec![0u64; bins];
    for v in values {
        if let Some(c) = counts.get_mut(v) {
            *c += 1;
        }
    }
    counts
}
