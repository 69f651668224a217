//! Experiments, statistical verification, CSV output and the `rollout-lab`
//! command line, built on `rollout-core`.

pub mod cli;
pub mod driver;
pub mod experiments;
pub mod output;
pub mod verify;

pub use driver::Driver;
