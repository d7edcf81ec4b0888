use std::fmt;

use serde::{Deserialize, Serialize};

use super::AffinePermutation;
use crate::{Error, Partition, Result};

/// A function `λ : ℤ → ℤ` with `λ_{i+k} = λ_i − n`, stored by its window
/// `(λ_1, …, λ_k)`. Elements of `𝒫_{k,n}`; cylindric loops are instances.
///
/// JSON form: `{"k":3,"n":4,"window":[4,3,2]}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawLoop")]
pub struct LoopFunction {
    k: usize,
    n: usize,
    window: Vec<i64>,
}

#[derive(Deserialize)]
struct RawLoop {
    k: usize,
    n: usize,
    window: Vec<i64>,
}

impl TryFrom<RawLoop> for LoopFunction {
    type Error = Error;
    fn try_from(raw: RawLoop) -> Result<Self> {
        if raw.window.len() != raw.k {
            return Err(Error::WindowLength { len: raw.window.len(), k: raw.k });
        }
        LoopFunction::new(raw.n, raw.window)
    }
}

/// The alcove `𝒜_{k,n} = {n ≥ λ_1 ≥ … ≥ λ_k > 0}`, lexicographically
/// decreasing.
pub fn alcove(k: usize, n: usize) -> Vec<Partition> {
    fn rec(k: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if cur.len() == k {
            out.push(Partition::new(cur.clone()).expect("decreasing"));
            return;
        }
        for p in (1..=max).rev() {
            cur.push(p);
            rec(k, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 && n > 0 {
        rec(k, n as u32, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

impl LoopFunction {
    pub fn new(n: usize, window: Vec<i64>) -> Result<Self> {
        if window.is_empty() {
            return Err(Error::NonPositive { name: "k" });
        }
        if n == 0 {
            return Err(Error::NonPositive { name: "n" });
        }
        Ok(LoopFunction { k: window.len(), n, window })
    }

    /// The loop with window `(λ_1, …, λ_k)`, zero-padded.
    pub fn from_partition(lambda: &Partition, k: usize, n: usize) -> Result<Self> {
        LoopFunction::new(n, lambda.padded(k)?)
    }

    /// Like [`from_partition`](Self::from_partition) but requires `λ ∈ 𝒜_{k,n}`.
    pub fn from_alcove(lambda: &Partition, k: usize, n: usize) -> Result<Self> {
        let l = LoopFunction::from_partition(lambda, k, n)?;
        if !l.in_alcove() {
            return Err(Error::NotInAlcove { partition: lambda.clone(), k, n });
        }
        Ok(l)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `λ_m = λ_{((m−1) mod k)+1} − n·⌊(m−1)/k⌋`.
    pub fn eval(&self, m: i64) -> i64 {
        let k = self.k as i64;
        let q = (m - 1).div_euclid(k);
        let r = (m - 1).rem_euclid(k) as usize;
        self.window[r] - self.n as i64 * q
    }

    /// Sum over one period.
    pub fn size(&self) -> i64 {
        self.window.iter().sum()
    }

    pub fn in_alcove(&self) -> bool {
        let n = self.n as i64;
        self.window[0] <= n && *self.window.last().expect("k ≥ 1") > 0 && self.window.windows(2).all(|w| w[0] >= w[1])
    }

    /// Weakly decreasing as a function on all of ℤ.
    pub fn is_decreasing(&self) -> bool {
        self.window.windows(2).all(|w| w[0] >= w[1]) && self.window[0] - self.window[self.k - 1] <= self.n as i64
    }

    pub fn to_partition(&self) -> Result<Partition> {
        Partition::from_i64(&self.window)
    }

    /// Right action `λ∘ŵ`: window `i ↦ λ(ŵ(i))`.
    pub fn act(&self, w: &AffinePermutation) -> Result<LoopFunction> {
        if w.k() != self.k {
            return Err(Error::PeriodMismatch { left: self.k, right: w.k() });
        }
        Ok(LoopFunction { k: self.k, n: self.n, window: w.window().iter().map(|&m| self.eval(m)).collect() })
    }

    /// `λ∘τ^d`, i.e. window `i ↦ λ(i − d)`.
    pub fn shift(&self, d: i64) -> LoopFunction {
        LoopFunction { k: self.k, n: self.n, window: (1..=self.k as i64).map(|i| self.eval(i - d)).collect() }
    }

    /// Componentwise `self ≤ other` on one period (hence everywhere).
    pub fn le(&self, other: &LoopFunction) -> Result<bool> {
        self.check_level(other)?;
        Ok(self.window.iter().zip(&other.window).all(|(a, b)| a <= b))
    }

    pub(crate) fn check_level(&self, other: &LoopFunction) -> Result<()> {
        if self.k != other.k || self.n != other.n {
            return Err(Error::LevelMismatch { k1: self.k, n1: self.n, k2: other.k, n2: other.n });
        }
        Ok(())
    }

    /// Transpose of the boundary path,
    /// `λ'_j = #{i ≥ 1 : λ_i ≥ j} − #{i ≤ 0 : λ_i < j}`, a loop of period `n`
    /// and shift `k`.
    pub fn conjugate(&self) -> LoopFunction {
        let n = self.n as i64;
        let window = (1..=n)
            .map(|j| {
                let mut total = 0i64;
                for &v in &self.window {
                    // i = r + qk, q ≥ 0 contributes while v − qn ≥ j
                    if v >= j {
                        total += (v - j).div_euclid(n) + 1;
                    }
                    // i = r − qk, q ≥ 1 contributes while v + qn < j
                    let t = j - v;
                    if t > n {
                        total -= (t - 1).div_euclid(n);
                    }
                }
                total
            })
            .collect();
        LoopFunction { k: self.n, n: self.k, window }
    }

    /// The unique alcove point `ν` of the orbit together with a witness `ŵ`
    /// such that `ν = λ∘ŵ`.
    ///
    /// Each entry is moved into `(0, n]` by a translation `y^α`, then the
    /// window is bubble-sorted with simple reflections.
    pub fn reduce_to_alcove(&self) -> (Partition, AffinePermutation) {
        let n = self.n as i64;
        let alpha: Vec<i64> = self.window.iter().map(|&v| -(v - 1).div_euclid(n)).collect();
        let mut witness = AffinePermutation::y_power(&alpha).expect("valid translation");
        let mut cur = self.act(&witness).expect("same period");
        let k = self.k;
        for pass in 0..k {
            for i in 1..k - pass {
                if cur.window[i - 1] < cur.window[i] {
                    let s = AffinePermutation::sigma(i, k).expect("1 ≤ i < k");
                    cur = cur.act(&s).expect("same period");
                    witness = witness.compose(&s).expect("same period");
                }
            }
        }
        let nu = cur.to_partition().expect("entries in (0, n]");
        (nu, witness)
    }
}

impl fmt::Debug for LoopFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}@(k={},n={})", self.window, self.k, self.n)
    }
}
