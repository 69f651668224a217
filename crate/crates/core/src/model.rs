//! Samplers for the uniform stochastic model: weights and profits i.i.d.
//! U[0,1], capacity U[0,n].
//!
//! Every trial owns an independent random stream keyed by
//! `(master_seed, trial_index)`: the master seed picks the ChaCha key and the
//! trial index picks the stream. A trial's instance therefore never depends on
//! which worker draws it or in what order.

use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::greedy::pass;
use crate::instance::{Instance, Problem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModelConfig {
    n: usize,
    pub problem: Problem,
    /// Keep only instances whose items do not all fit.
    pub condition_on_overflow: bool,
}

impl ModelConfig {
    pub fn new(n: usize, problem: Problem, condition_on_overflow: bool) -> Result<Self, SamplingError> {
        if n == 0 {
            return Err(SamplingError::NoItems);
        }
        Ok(Self {
            n,
            problem,
            condition_on_overflow,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TrialSeed {
    pub master_seed: u64,
    pub trial_index: u64,
}

impl TrialSeed {
    pub fn new(master_seed: u64, trial_index: u64) -> Self {
        Self {
            master_seed,
            trial_index,
        }
    }

    /// The random stream owned by this trial.
    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master_seed);
        rng.set_stream(self.trial_index);
        rng
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SamplingError {
    #[error("the model needs at least one item")]
    NoItems,
    #[error("critical item {k} outside 1..={n}")]
    CriticalOutOfRange { k: usize, n: usize },
    #[error("no accepted instance after {attempts} attempts")]
    BudgetExhausted { attempts: u64 },
}

/// Draws one instance from the unconditioned model.
pub fn draw<R: Rng + ?Sized>(cfg: &ModelConfig, rng: &mut R) -> Instance {
    let n = cfg.n;
    let weights: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
    let capacity = n as f64 * rng.gen::<f64>();
    let profits = match cfg.problem {
        Problem::SubsetSum => weights.clone(),
        Problem::Knapsack => (0..n).map(|_| rng.gen::<f64>()).collect(),
    };
    Instance::new(weights, profits, capacity).expect("model draws are finite and non-negative")
}

/// Samples the instance for one trial, rejecting until the items overflow the
/// capacity when the config asks for it (two attempts on average).
pub fn sample_instance(cfg: &ModelConfig, seed: TrialSeed) -> Instance {
    let mut rng = seed.rng();
    loop {
        let inst = draw(cfg, &mut rng);
        if !cfg.condition_on_overflow || inst.overflows() {
            return inst;
        }
    }
}

/// Samples an instance whose Blind-Greedy critical item is `k` (1-based),
/// trying at most `max_attempts` draws.
pub fn sample_conditioned_on_critical(
    cfg: &ModelConfig,
    k: usize,
    seed: TrialSeed,
    max_attempts: u64,
) -> Result<Instance, SamplingError> {
    if k == 0 || k > cfg.n {
        return Err(SamplingError::CriticalOutOfRange { k, n: cfg.n });
    }
    let mut rng = seed.rng();
    for _ in 0..max_attempts {
        let inst = draw(cfg, &mut rng);
        if pass(&inst, 0..inst.len(), inst.capacity()).stopped_at == Some(k - 1) {
            return Ok(inst);
        }
    }
    Err(SamplingError::BudgetExhausted {
        attempts: max_attempts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::greedy::blind_greedy;

    #[test]
    fn same_seed_same_instance() {
        let cfg = ModelConfig::new(7, Problem::Knapsack, true).unwrap();
        let a = sample_instance(&cfg, TrialSeed::new(42, 3));
        let b = sample_instance(&cfg, TrialSeed::new(42, 3));
        assert_eq!(a, b);
        let c = sample_instance(&cfg, TrialSeed::new(42, 4));
        assert_ne!(a, c);
    }

    #[test]
    fn subset_sum_profits_are_weights() {
        let cfg = ModelConfig::new(5, Problem::SubsetSum, false).unwrap();
        for t in 0..50 {
            assert!(sample_instance(&cfg, TrialSeed::new(1, t)).is_subset_sum());
        }
    }

    #[test]
    fn single_item_conditioned_is_always_critical() {
        let cfg = ModelConfig::new(1, Problem::SubsetSum, true).unwrap();
        for t in 0..1000 {
            let inst = sample_instance(&cfg, TrialSeed::new(9, t));
            assert!(inst.weight(0) > inst.capacity());
            assert_eq!(blind_greedy(&inst).critical_index(), 1);
        }
    }

    #[test]
    fn critical_conditioning() {
        let cfg = ModelConfig::new(2, Problem::SubsetSum, false).unwrap();
        for t in 0..500 {
            let inst = sample_conditioned_on_critical(&cfg, 1, TrialSeed::new(5, t), 10_000).unwrap();
            assert!(inst.weight(0) > inst.capacity());
        }
        assert_eq!(
            sample_conditioned_on_critical(&cfg, 3, TrialSeed::new(5, 0), 10),
            Err(SamplingError::CriticalOutOfRange { k: 3, n: 2 })
        );
        assert_eq!(
            sample_conditioned_on_critical(&cfg, 0, TrialSeed::new(5, 0), 10),
            Err(SamplingError::CriticalOutOfRange { k: 0, n: 2 })
        );
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let cfg = ModelConfig::new(50, Problem::SubsetSum, false).unwrap();
        // P(K = 50) = 1/100, so a single attempt fails for this seed often enough to find one.
        let failed = (0..100)
            .map(|t| sample_conditioned_on_critical(&cfg, 50, TrialSeed::new(3, t), 1))
            .any(|r| r == Err(SamplingError::BudgetExhausted { attempts: 1 }));
        assert!(failed);
    }

    #[test]
    fn zero_items_rejected() {
        assert_eq!(ModelConfig::new(0, Problem::Knapsack, false), Err(SamplingError::NoItems));
    }
}
