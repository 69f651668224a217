//! Reference implementations that tests compare the real code against.
//!
//! Nothing here depends on `rollout-core`. The bound formulas are evaluated in
//! exact rational arithmetic, term by term as they are printed, and the
//! algorithms are literal transcriptions working on plain slices.

pub mod exact;
pub mod reference;
