use alloc::vec::Vec;
use core::fmt;

/// Which of the two problems an instance belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Problem {
    /// Profits equal weights.
    SubsetSum,
    /// Profits drawn independently of weights.
    Knapsack,
}

impl Problem {
    pub fn as_str(self) -> &'static str {
        match self {
            Problem::SubsetSum => "subset-sum",
            Problem::Knapsack => "knapsack",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum InstanceError {
    #[error("instance must contain at least one item")]
    Empty,
    #[error("{weights} weights but {profits} profits")]
    LengthMismatch { weights: usize, profits: usize },
    #[error("item {index} has invalid {what} {value}")]
    InvalidItem {
        index: usize,
        what: &'static str,
        value: f64,
    },
    #[error("invalid capacity {0}")]
    InvalidCapacity(f64),
}

/// One problem instance: items in presentation order plus a capacity.
///
/// Weights, profits and capacity are finite and non-negative, and there is at
/// least one item. Fields are private so those invariants hold for every value
/// of this type.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    weights: Vec<f64>,
    profits: Vec<f64>,
    capacity: f64,
}

fn check_values(values: &[f64], what: &'static str) -> Result<(), InstanceError> {
    match values
        .iter()
        .enumerate()
        .find(|(_, v)| !(v.is_finite() && **v >= 0.0))
    {
        Some((index, &value)) => Err(InstanceError::InvalidItem { index, what, value }),
        None => Ok(()),
    }
}

impl Instance {
    pub fn new(weights: Vec<f64>, profits: Vec<f64>, capacity: f64) -> Result<Self, InstanceError> {
        if weights.is_empty() {
            return Err(InstanceError::Empty);
        }
        if weights.len() != profits.len() {
            return Err(InstanceError::LengthMismatch {
                weights: weights.len(),
                profits: profits.len(),
            });
        }
        check_values(&weights, "weight")?;
        check_values(&profits, "profit")?;
        if !(capacity.is_finite() && capacity >= 0.0) {
            return Err(InstanceError::InvalidCapacity(capacity));
        }
        Ok(Self {
            weights,
            profits,
            capacity,
        })
    }

    /// Subset sum instance: profits are copies of the weights.
    pub fn subset_sum(weights: Vec<f64>, capacity: f64) -> Result<Self, InstanceError> {
        let profits = weights.clone();
        Self::new(weights, profits, capacity)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn profits(&self) -> &[f64] {
        &self.profits
    }

    pub fn capacity(&self) -> f64 {
        self.capacity
    }

    pub fn weight(&self, item: usize) -> f64 {
        self.weights[item]
    }

    pub fn profit(&self, item: usize) -> f64 {
        self.profits[item]
    }

    pub fn total_weight(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// True when the items do not all fit, the regime in which the algorithms differ.
    pub fn overflows(&self) -> bool {
        self.total_weight() > self.capacity
    }

    pub fn is_subset_sum(&self) -> bool {
        self.weights == self.profits
    }

    /// Total weight and profit of `items`, or `None` if the set exceeds capacity.
    pub fn evaluate(&self, items: &[usize]) -> Option<f64> {
        let weight: f64 = items.iter().map(|&i| self.weights[i]).sum();
        (weight <= self.capacity).then(|| items.iter().map(|&i| self.profits[i]).sum())
    }
}
