use serde::Serialize;

use super::LoopFunction;
use crate::{Error, Partition, Result};

/// `μ[0] ≤ λ[d]`, checked on one period.
pub fn cylindric_contains(mu: &LoopFunction, lambda_d: &LoopFunction) -> Result<bool> {
    mu.le(lambda_d)
}

/// The cylindric skew diagram `λ/d/μ`: the lattice cells between the loops
/// `μ[0]` and `λ[d]`, invariant under `(i, j) ↦ (i + k, j − n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CylindricShape {
    lambda: Partition,
    d: u64,
    mu: Partition,
    k: usize,
    n: usize,
}

impl CylindricShape {
    pub fn new(lambda: &Partition, d: u64, mu: &Partition, k: usize, n: usize) -> Result<Self> {
        let outer = LoopFunction::from_alcove(lambda, k, n)?.shift(d as i64);
        let inner = LoopFunction::from_alcove(mu, k, n)?;
        if !cylindric_contains(&inner, &outer)? {
            return Err(Error::NotContained { inner: format!("{mu}[0]"), outer: format!("{lambda}[{d}]") });
        }
        Ok(CylindricShape { lambda: lambda.clone(), d, mu: mu.clone(), k, n })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn degree(&self) -> u64 {
        self.d
    }

    pub fn outer_loop(&self) -> LoopFunction {
        LoopFunction::from_partition(&self.lambda, self.k, self.n).expect("validated").shift(self.d as i64)
    }

    pub fn inner_loop(&self) -> LoopFunction {
        LoopFunction::from_partition(&self.mu, self.k, self.n).expect("validated")
    }

    /// Whether `(i, j)` lies in the shape, for any row `i ∈ ℤ`.
    pub fn contains_cell(&self, i: i64, j: i64) -> bool {
        self.inner_loop().eval(i) < j && j <= self.outer_loop().eval(i)
    }

    /// Cells `(i, j)` of the fundamental strip `1 ≤ i ≤ k`, row by row.
    pub fn cells(&self) -> Vec<(i64, i64)> {
        let inner = self.inner_loop();
        let outer = self.outer_loop();
        (1..=self.k as i64).flat_map(|i| (inner.eval(i) + 1..=outer.eval(i)).map(move |j| (i, j))).collect()
    }

    /// `nd + |λ| − |μ|`.
    pub fn cell_count(&self) -> u64 {
        self.n as u64 * self.d + self.lambda.size() - self.mu.size()
    }
}
