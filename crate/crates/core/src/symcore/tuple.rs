use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::{Partition, Result};

/// A fixed-length integer tuple: a weight `α ∈ 𝒫_k`, a composition, or a
/// rearrangement `λ∘w` of a partition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntTuple(pub Vec<i64>);

impl IntTuple {
    pub fn new(entries: Vec<i64>) -> Self {
        IntTuple(entries)
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Sorted into a partition; fails on negative entries.
    pub fn sorted_partition(&self) -> Result<Partition> {
        Partition::from_unsorted(&self.0)
    }

    /// Componentwise `self ≤ other`.
    pub fn le_componentwise(&self, other: &IntTuple) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &IntTuple) -> IntTuple {
        IntTuple(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &IntTuple) -> IntTuple {
        IntTuple(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Deref for IntTuple {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for IntTuple {
    fn from(v: Vec<i64>) -> Self {
        IntTuple(v)
    }
}

impl fmt::Debug for IntTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
