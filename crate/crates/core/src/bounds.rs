//! Closed-form results on the greedy gap and on the first rollout iteration,
//! all conditioned on the items overflowing the capacity.
//!
//! Each bound is only stated for item counts from some minimum upward, and
//! the evaluators refuse smaller `n` instead of extrapolating.

use alloc::vec::Vec;
use core::ops::RangeInclusive;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BoundError {
    #[error("{kind} needs n >= {min}, got {n}")]
    BelowValidity { kind: &'static str, n: usize, min: usize },
    #[error("gap {0} outside [0, 1]")]
    GapOutOfDomain(f64),
    #[error("T(j, m) needs 1 <= j <= m + 1, got j = {j}, m = {m}")]
    TermOutOfRange { j: usize, m: usize },
}

fn require(kind: &'static str, n: usize, min: usize) -> Result<(), BoundError> {
    if n < min {
        Err(BoundError::BelowValidity { kind, n, min })
    } else {
        Ok(())
    }
}

/// CDF of the Blind-Greedy gap, `2g - g^2` on [0, 1], independent of `n`.
pub fn greedy_gap_cdf(g: f64) -> Result<f64, BoundError> {
    if !(0.0..=1.0).contains(&g) {
        return Err(BoundError::GapOutOfDomain(g));
    }
    Ok(2.0 * g - g * g)
}

/// Mean of the greedy gap.
pub const GREEDY_GAP_MEAN: f64 = 1.0 / 3.0;

/// Upper bound on the expected subset sum gap after one consecutive iteration.
pub fn consec_ss_bound(n: usize) -> Result<f64, BoundError> {
    require("consecutive subset sum bound", n, 3)?;
    let n = n as f64;
    Ok((3.0 + 13.0 * n) / (60.0 * n))
}

/// Lower bound on the expected knapsack gain after one consecutive iteration.
pub fn consec_kp_bound(n: usize) -> Result<f64, BoundError> {
    require("consecutive knapsack bound", n, 3)?;
    let n = n as f64;
    Ok((-26.0 + 59.0 * n) / (288.0 * n))
}

/// Upper bound on the expected subset sum gap after one exhaustive iteration.
pub fn exh_ss_bound(n: usize) -> Result<f64, BoundError> {
    require("exhaustive subset sum bound", n, 2)?;
    let nf = n as f64;
    let sum: f64 = (0..=n - 2)
        .map(|m| {
            let m = m as f64;
            (9.0 + 2.0 * m) / (3.0 * (3.0 + m) * (4.0 + m))
        })
        .sum();
    Ok(1.0 / (nf * (nf + 2.0)) + sum / nf)
}

/// Logarithmic relaxation of [`exh_ss_bound`]; never smaller than it.
pub fn exh_ss_log_bound(n: usize) -> Result<f64, BoundError> {
    require("exhaustive subset sum log bound", n, 2)?;
    let n = n as f64;
    let arg = ((3.0 + 2.0 * n) / 5.0) * libm::cbrt(7.0 / (5.0 + 2.0 * n));
    Ok(1.0 / (n * (n + 2.0)) + libm::log(arg) / n)
}

/// `H(n) = 1 + 1/2 + ... + 1/n`, with `H(0) = 0`.
pub fn harmonic(n: usize) -> f64 {
    (1..=n).map(|l| 1.0 / l as f64).sum()
}

/// The nested term `T(j, m)` of the exhaustive knapsack bound.
///
/// The two printed fractions share a denominator and their `H` terms combine
/// into `(j + (2+m)^2) (H(3+m) - H(j))`; the harmonic difference is summed
/// directly so the large cancelling parts never appear.
pub fn exh_kp_t(j: usize, m: usize) -> Result<f64, BoundError> {
    if j == 0 || j > m + 1 {
        return Err(BoundError::TermOutOfRange { j, m });
    }
    let tail: f64 = (j + 1..=m + 3).map(|l| 1.0 / l as f64).sum();
    Ok(t_with_tail(j, m, tail))
}

/// `T(j, m)` given `tail = H(3+m) - H(j)`.
fn t_with_tail(j: usize, m: usize, tail: f64) -> f64 {
    let (j, m) = (j as f64, m as f64);
    let coeff = j + (2.0 + m) * (2.0 + m);
    let numer = 2.0 * ((-4.0 + j - 4.0 * m + j * m - m * m) + coeff * tail);
    // (j-3-m) <= -2 and (j-2-m) <= -1 on the valid range.
    let denom = j * (-3.0 + j - m) * (-2.0 + j - m) * (1.0 + m) * (2.0 + m);
    numer / denom
}

/// Lower bound on the expected knapsack gain after one exhaustive iteration.
///
/// With `include_t == false` the nested `T(j, m)` sum is dropped. Every
/// `T(j, m)` is positive, so that variant is looser but still a lower bound.
pub fn exh_kp_bound(n: usize, include_t: bool) -> Result<f64, BoundError> {
    require("exhaustive knapsack bound", n, 1)?;
    let nf = n as f64;
    let mut sum = 0.0;
    for m in 0..n.saturating_sub(1) {
        if include_t {
            // Walk j downwards so the harmonic tail grows one term at a time.
            let mut tail = 1.0 / (m + 2) as f64 + 1.0 / (m + 3) as f64;
            for j in (1..=m + 1).rev() {
                sum += t_with_tail(j, m, tail);
                tail += 1.0 / j as f64;
            }
        }
        let h = harmonic(m + 1);
        let m = m as f64;
        let (m2, m3, m4, m5) = (m * m, m * m * m, m * m * m * m, m * m * m * m * m);
        let p0 = 186.0 + 472.0 * m + 448.0 * m2 + 203.0 * m3 + 45.0 * m4 + 4.0 * m5;
        let p1 = 244.0 + 454.0 * m + 334.0 * m2 + 124.0 * m3 + 24.0 * m4 + 2.0 * m5;
        let p2 = 48.0 + 88.0 * m + 60.0 * m2 + 18.0 * m3 + 2.0 * m4;
        let denom = (m + 1.0) * (m + 2.0) * (m + 2.0) * (m + 2.0) * (m + 3.0) * (m + 3.0);
        sum += (p0 - p1 * h - p2 * h * h) / denom;
    }
    Ok(1.0 + 2.0 / (nf * (nf + 1.0)) - 2.0 * harmonic(n) / (nf * nf) + sum / nf)
}

/// Which closed form a [`BoundCurve`] tabulates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    ConsecSS,
    ConsecKP,
    ExhSSSum,
    ExhSSLog,
    ExhKPFull,
    ExhKPNoT,
    GreedyMean,
}

impl BoundKind {
    pub const ALL: [BoundKind; 7] = [
        BoundKind::ConsecSS,
        BoundKind::ConsecKP,
        BoundKind::ExhSSSum,
        BoundKind::ExhSSLog,
        BoundKind::ExhKPFull,
        BoundKind::ExhKPNoT,
        BoundKind::GreedyMean,
    ];

    /// Smallest item count the closed form is stated for.
    pub fn min_n(self) -> usize {
        match self {
            BoundKind::ConsecSS | BoundKind::ConsecKP => 3,
            BoundKind::ExhSSSum | BoundKind::ExhSSLog => 2,
            BoundKind::ExhKPFull | BoundKind::ExhKPNoT | BoundKind::GreedyMean => 1,
        }
    }

    pub fn evaluate(self, n: usize) -> Result<f64, BoundError> {
        match self {
            BoundKind::ConsecSS => consec_ss_bound(n),
            BoundKind::ConsecKP => consec_kp_bound(n),
            BoundKind::ExhSSSum => exh_ss_bound(n),
            BoundKind::ExhSSLog => exh_ss_log_bound(n),
            BoundKind::ExhKPFull => exh_kp_bound(n, true),
            BoundKind::ExhKPNoT => exh_kp_bound(n, false),
            BoundKind::GreedyMean => {
                require("greedy gap mean", n, 1)?;
                Ok(GREEDY_GAP_MEAN)
            }
        }
    }
}

/// A bound tabulated over a range of item counts.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCurve {
    pub kind: BoundKind,
    pub points: Vec<(usize, f64)>,
}

impl BoundCurve {
    pub fn tabulate(kind: BoundKind, ns: RangeInclusive<usize>) -> Result<Self, BoundError> {
        let points = ns
            .map(|n| kind.evaluate(n).map(|v| (n, v)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { kind, points })
    }

    pub fn value_at(&self, n: usize) -> Option<f64> {
        self.points.iter().find(|(m, _)| *m == n).map(|&(_, v)| v)
    }
}
