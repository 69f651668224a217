//! Blind-Greedy: pack items in the order presented until the first one that
//! does not fit, then stop.

use alloc::vec::Vec;

use crate::instance::Instance;

/// Result of a Blind-Greedy pass over the items in their given order.
#[derive(Debug, Clone, PartialEq)]
pub struct GreedyOutcome {
    /// Packed items (0-based), always the prefix `0..k` of the input order.
    pub packed: Vec<usize>,
    pub value: f64,
    /// Capacity left unused.
    pub gap: f64,
    /// 0-based critical item, `None` when every item fits.
    pub critical: Option<usize>,
}

impl GreedyOutcome {
    /// Critical item as a 1-based position, 0 when every item fits.
    pub fn critical_index(&self) -> usize {
        self.critical.map_or(0, |k| k + 1)
    }
}

/// Summary of a greedy pass that does not record the packed items.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Pass {
    pub value: f64,
    pub remaining: f64,
    /// Item that stopped the pass.
    pub stopped_at: Option<usize>,
}

/// Greedy pass over `order` starting from `capacity`.
pub(crate) fn pass<I>(inst: &Instance, order: I, capacity: f64) -> Pass
where
    I: IntoIterator<Item = usize>,
{
    let mut remaining = capacity;
    let mut value = 0.0;
    for item in order {
        let w = inst.weight(item);
        if w <= remaining {
            remaining -= w;
            value += inst.profit(item);
        } else {
            return Pass {
                value,
                remaining,
                stopped_at: Some(item),
            };
        }
    }
    Pass {
        value,
        remaining,
        stopped_at: None,
    }
}

/// Runs Blind-Greedy on `order` with the given capacity, recording packed items.
pub fn blind_greedy_on(inst: &Instance, order: &[usize], capacity: f64) -> GreedyOutcome {
    let mut packed = Vec::new();
    let mut remaining = capacity;
    let mut value = 0.0;
    let mut critical = None;
    for &item in order {
        let w = inst.weight(item);
        if w <= remaining {
            remaining -= w;
            value += inst.profit(item);
            packed.push(item);
        } else {
            critical = Some(item);
            break;
        }
    }
    GreedyOutcome {
        packed,
        value,
        gap: remaining,
        critical,
    }
}

/// Runs Blind-Greedy on the instance in its presentation order.
pub fn blind_greedy(inst: &Instance) -> GreedyOutcome {
    let order: Vec<usize> = (0..inst.len()).collect();
    blind_greedy_on(inst, &order, inst.capacity())
}
