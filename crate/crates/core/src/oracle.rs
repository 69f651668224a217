//! Exact solver for small instances, used as ground truth.
//!
//! Weights are continuous so there is no pseudo-polynomial table to build.
//! The solver enumerates subsets depth first, pruning branches that exceed
//! the capacity or cannot beat the incumbent even by taking every remaining
//! item.

use alloc::vec::Vec;

use crate::instance::Instance;

/// Largest instance [`solve_exact`] accepts.
pub const MAX_EXACT_ITEMS: usize = 25;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("{n} items exceeds the exact solver limit of {MAX_EXACT_ITEMS}")]
    TooLarge { n: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExactSolution {
    /// Chosen items, 0-based and ascending.
    pub chosen: Vec<usize>,
    pub value: f64,
    pub is_optimal: bool,
}

struct Search<'a> {
    inst: &'a Instance,
    /// suffix_profit[i] = profit of items i..n.
    suffix_profit: Vec<f64>,
    current: Vec<usize>,
    best: Vec<usize>,
    best_value: f64,
}

impl Search<'_> {
    fn visit(&mut self, item: usize, room: f64, value: f64) {
        if value > self.best_value {
            self.best_value = value;
            self.best.clone_from(&self.current);
        }
        if item == self.inst.len() || value + self.suffix_profit[item] <= self.best_value {
            return;
        }
        let w = self.inst.weight(item);
        if w <= room {
            self.current.push(item);
            self.visit(item + 1, room - w, value + self.inst.profit(item));
            self.current.pop();
        }
        self.visit(item + 1, room, value);
    }
}

/// Maximum-profit feasible subset.
pub fn solve_exact(inst: &Instance) -> Result<ExactSolution, OracleError> {
    let n = inst.len();
    if n > MAX_EXACT_ITEMS {
        return Err(OracleError::TooLarge { n });
    }
    let mut suffix_profit = alloc::vec![0.0; n + 1];
    for i in (0..n).rev() {
        suffix_profit[i] = suffix_profit[i + 1] + inst.profit(i);
    }
    let mut search = Search {
        inst,
        suffix_profit,
        current: Vec::with_capacity(n),
        best: Vec::new(),
        best_value: 0.0,
    };
    search.visit(0, inst.capacity(), 0.0);
    Ok(ExactSolution {
        chosen: search.best,
        value: search.best_value,
        is_optimal: true,
    })
}

/// How far `algo_value` falls short of the optimum.
pub fn optimality_gap(inst: &Instance, algo_value: f64) -> Result<f64, OracleError> {
    Ok(solve_exact(inst)?.value - algo_value)
}
