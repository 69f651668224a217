//! Gap and gain reached by the first iteration of each rollout algorithm.
//!
//! The first consecutive iteration picks the better of Blind-Greedy and
//! Blind-Greedy with the first item dropped. The first exhaustive iteration
//! picks the best of the `n` sequences obtained by moving one item to the
//! front. Full runs can only improve on these.

use alloc::vec::Vec;

use crate::greedy::{blind_greedy, pass};
use crate::instance::Instance;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FirstIterStats {
    /// Gap left by Blind-Greedy on the original order.
    pub greedy_gap: f64,
    /// Smallest gap among the completions tried; never above `greedy_gap`.
    pub min_gap: f64,
    /// Largest profit improvement over Blind-Greedy, floored at zero.
    pub gain: f64,
}

/// Blind-Greedy versus Blind-Greedy on items `2..n`.
pub fn first_iteration_consecutive(inst: &Instance) -> FirstIterStats {
    let greedy = pass(inst, 0..inst.len(), inst.capacity());
    let drop = pass(inst, 1..inst.len(), inst.capacity());
    FirstIterStats {
        greedy_gap: greedy.remaining,
        min_gap: greedy.remaining.min(drop.remaining),
        gain: (drop.value - greedy.value).max(0.0),
    }
}

/// Gap and value of Blind-Greedy after moving one item to the front.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Insertion {
    pub gap: f64,
    pub value: f64,
}

/// Blind-Greedy with item `j` moved to the front, for every `j`.
///
/// Uses prefix sums and a binary search for the stopping point, so the whole
/// scan costs O(n log n) instead of n separate greedy passes.
pub fn insertions(inst: &Instance) -> Vec<Insertion> {
    let n = inst.len();
    let b = inst.capacity();
    let mut wsum = Vec::with_capacity(n + 1);
    let mut psum = Vec::with_capacity(n + 1);
    let (mut w_acc, mut p_acc) = (0.0, 0.0);
    wsum.push(0.0);
    psum.push(0.0);
    for i in 0..n {
        w_acc += inst.weight(i);
        p_acc += inst.profit(i);
        wsum.push(w_acc);
        psum.push(p_acc);
    }

    (0..n)
        .map(|j| {
            let wj = inst.weight(j);
            if wj > b {
                return Insertion { gap: b, value: 0.0 };
            }
            let room = b - wj;
            // Weight and profit of the first `len` items of the order with `j` removed.
            let taken = |len: usize| -> (f64, f64) {
                if len <= j {
                    (wsum[len], psum[len])
                } else {
                    (wsum[len + 1] - wj, psum[len + 1] - inst.profit(j))
                }
            };
            // Largest len in 0..n with taken(len).0 <= room; len = 0 always qualifies.
            let (mut lo, mut hi) = (0usize, n - 1);
            while lo < hi {
                let mid = lo + (hi - lo).div_ceil(2);
                if taken(mid).0 <= room {
                    lo = mid;
                } else {
                    hi = mid - 1;
                }
            }
            let (w, p) = taken(lo);
            Insertion {
                gap: room - w,
                value: inst.profit(j) + p,
            }
        })
        .collect()
}

/// Best of the `n` move-to-front greedy runs, compared with plain Blind-Greedy.
pub fn first_iteration_exhaustive(inst: &Instance) -> FirstIterStats {
    let greedy = blind_greedy(inst);
    let mut min_gap = greedy.gap;
    let mut gain: f64 = 0.0;
    for ins in insertions(inst) {
        min_gap = min_gap.min(ins.gap);
        gain = gain.max(ins.value - greedy.value);
    }
    FirstIterStats {
        greedy_gap: greedy.gap,
        min_gap,
        gain,
    }
}
