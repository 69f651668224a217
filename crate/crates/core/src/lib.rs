//! Rollout algorithms for the stochastic subset sum and 0-1 knapsack problems.
//!
//! The crate is `no_std` (it only needs `alloc`) and holds everything that is a
//! pure function of its inputs:
//!
//! - [`greedy`]: the Blind-Greedy base policy.
//! - [`rollout`]: consecutive and exhaustive rollout built on top of it.
//! - [`first_iter`]: the gap/gain reached by the first rollout iteration.
//! - [`model`]: samplers for the uniform stochastic model with counter-based seeding.
//! - [`bounds`]: closed-form bounds on the expected first-iteration gap and gain.
//! - [`oracle`]: exact enumeration for small instances.
//! - [`stats`]: one-pass moment accumulation and goodness-of-fit statistics.
//!
//! Item indices are 0-based inside the crate. Anything meant for reporting
//! converts to 1-based positions (see [`GreedyOutcome::critical_index`]).
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bounds;
pub mod first_iter;
pub mod greedy;
pub mod instance;
pub mod model;
pub mod oracle;
pub mod rollout;
pub mod stats;

pub use first_iter::{first_iteration_consecutive, first_iteration_exhaustive, FirstIterStats};
pub use greedy::{blind_greedy, GreedyOutcome};
pub use instance::{Instance, InstanceError, Problem};
pub use model::{ModelConfig, SamplingError, TrialSeed};
pub use oracle::{optimality_gap, solve_exact, ExactSolution, OracleError};
pub use rollout::{consecutive_rollout, exhaustive_rollout, RolloutResult, RolloutStep};
