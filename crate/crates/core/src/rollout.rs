//! Consecutive and exhaustive rollout with Blind-Greedy as the base policy.
//!
//! Both algorithms score a candidate decision by the value of the greedy
//! completion it leads to. Estimates are values of the completion only and
//! exclude profit already committed; the comparison between candidates is the
//! same either way.
//!
//! Reported solution values are summed over the chosen items in index order,
//! whatever order they were committed in. Equal sets then have bit-identical
//! values, and since rounding is monotone, adding an item never lowers the sum.

use alloc::vec::Vec;

use crate::greedy::pass;
use crate::instance::Instance;

/// One iteration of a rollout run.
#[derive(Debug, Clone, PartialEq)]
pub enum RolloutStep {
    Consecutive {
        item: usize,
        /// Greedy completion with `item` first.
        add_estimate: f64,
        /// Greedy completion with `item` removed.
        skip_estimate: f64,
        added: bool,
        /// Solution value after this iteration.
        value: f64,
    },
    Exhaustive {
        /// `(item, estimate)` for every remaining item, in remaining order.
        candidates: Vec<(usize, f64)>,
        /// Item committed this iteration, `None` on the terminating iteration.
        chosen: Option<usize>,
        value: f64,
    },
}

impl RolloutStep {
    pub fn value(&self) -> f64 {
        match self {
            RolloutStep::Consecutive { value, .. } | RolloutStep::Exhaustive { value, .. } => *value,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RolloutResult {
    /// Chosen items (0-based) in the order they were committed.
    pub solution: Vec<usize>,
    pub value: f64,
    pub trace: Vec<RolloutStep>,
}

impl RolloutResult {
    pub fn total_weight(&self, inst: &Instance) -> f64 {
        self.solution.iter().map(|&i| inst.weight(i)).sum()
    }
}

/// Scans items in order and adds item `i` iff the greedy completion with `i`
/// first is strictly better than the one without it. Ties skip the item.
pub fn consecutive_rollout(inst: &Instance) -> RolloutResult {
    let n = inst.len();
    let mut remaining = inst.capacity();
    let mut value = 0.0;
    let mut solution = Vec::new();
    let mut trace = Vec::with_capacity(n);

    for item in 0..n {
        let add_estimate = pass(inst, item..n, remaining).value;
        let skip_estimate = pass(inst, item + 1..n, remaining).value;
        // add_estimate > skip_estimate >= 0 forces the item to be feasible.
        let added = add_estimate > skip_estimate;
        if added {
            remaining -= inst.weight(item);
            value += inst.profit(item);
            solution.push(item);
        }
        trace.push(RolloutStep::Consecutive {
            item,
            add_estimate,
            skip_estimate,
            added,
            value,
        });
    }

    RolloutResult {
        solution,
        value,
        trace,
    }
}

/// Each iteration moves every remaining item to the front in turn, runs
/// Blind-Greedy, and commits the item with the best estimate (lowest index on
/// ties). Stops as soon as no estimate is positive, since nothing changes after
/// that.
pub fn exhaustive_rollout(inst: &Instance) -> RolloutResult {
    let mut remaining_items: Vec<usize> = (0..inst.len()).collect();
    let mut remaining = inst.capacity();
    let mut value = 0.0;
    let mut solution = Vec::new();
    let mut chosen_sorted: Vec<usize> = Vec::new();
    let mut trace = Vec::new();

    while !remaining_items.is_empty() {
        let candidates: Vec<(usize, f64)> = remaining_items
            .iter()
            .map(|&front| {
                let rest = remaining_items.iter().copied().filter(|&i| i != front);
                let estimate = pass(inst, core::iter::once(front).chain(rest), remaining).value;
                (front, estimate)
            })
            .collect();

        // Strict comparison keeps the earliest (lowest index) maximiser.
        let mut best: Option<(usize, usize, f64)> = None;
        for (pos, &(item, estimate)) in candidates.iter().enumerate() {
            if best.is_none_or(|(_, _, e)| estimate > e) {
                best = Some((pos, item, estimate));
            }
        }

        match best {
            Some((pos, item, estimate)) if estimate > 0.0 => {
                remaining_items.remove(pos);
                remaining -= inst.weight(item);
                solution.push(item);
                let at = chosen_sorted.partition_point(|&i| i < item);
                chosen_sorted.insert(at, item);
                value = chosen_sorted.iter().map(|&i| inst.profit(i)).sum();
                trace.push(RolloutStep::Exhaustive {
                    candidates,
                    chosen: Some(item),
                    value,
                });
            }
            _ => {
                trace.push(RolloutStep::Exhaustive {
                    candidates,
                    chosen: None,
                    value,
                });
                break;
            }
        }
    }

    RolloutResult {
        solution,
        value,
        trace,
    }
}
