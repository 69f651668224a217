//! Parallel trial driver.
//!
//! Trials are cut into fixed-size chunks by trial index. Each chunk is
//! reduced sequentially and chunk results are merged in chunk order, so the
//! floating-point result is identical for any worker count.

use rayon::prelude::*;
use rollout_core::stats::{Estimate, Moments};
use rollout_core::TrialSeed;

/// Trials per chunk. Changing it changes the low bits of every estimate.
pub const CHUNK: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Driver {
    workers: usize,
}

impl Default for Driver {
    fn default() -> Self {
        Self::new(default_workers())
    }
}

pub fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

impl Driver {
    pub fn new(workers: usize) -> Self {
        Self {
            workers: workers.max(1),
        }
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    fn install<R: Send>(&self, op: impl FnOnce() -> R + Send) -> R {
        if self.workers == 1 {
            return op();
        }
        match rayon::ThreadPoolBuilder::new().num_threads(self.workers).build() {
            Ok(pool) => pool.install(op),
            Err(_) => op(),
        }
    }

    /// Mean and standard error of `f` over trials `0..trials`.
    pub fn estimate<F>(&self, trials: u64, master_seed: u64, f: F) -> Estimate
    where
        F: Fn(TrialSeed) -> f64 + Sync,
    {
        let chunks = trials.div_ceil(CHUNK);
        let partials: Vec<Moments> = self.install(|| {
            (0..chunks)
                .into_par_iter()
                .map(|c| {
                    let end = ((c + 1) * CHUNK).min(trials);
                    (c * CHUNK..end)
                        .map(|t| f(TrialSeed::new(master_seed, t)))
                        .collect::<Moments>()
                })
                .collect()
        });
        let mut total = Moments::new();
        for p in &partials {
            total.merge(p);
        }
        total.estimate()
    }

    /// `f` for every trial, in trial order.
    pub fn collect<T, F>(&self, trials: u64, master_seed: u64, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(TrialSeed) -> T + Sync,
    {
        self.install(|| {
            (0..trials)
                .into_par_iter()
                .map(|t| f(TrialSeed::new(master_seed, t)))
                .collect()
        })
    }
}

/// SplitMix64 finaliser, used to derive independent master seeds.
pub fn mix_seed(seed: u64, salt: u64) -> u64 {
    let mut z = seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
