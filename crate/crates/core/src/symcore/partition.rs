use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// An integer partition, stored without trailing zeros.
///
/// Serialises as a JSON array of parts, e.g. `[4,3,2]`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

/// Builds a [`Partition`] from literal parts, panicking if they are not
/// weakly decreasing.
#[macro_export]
macro_rules! partition {
    () => {
        $crate::Partition::empty()
    };
    ($($x:expr),+ $(,)?) => {
        $crate::Partition::new(vec![$($x),+]).expect("parts must be weakly decreasing")
    };
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Trailing zeros are dropped.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing { parts: parts.iter().map(|&p| p as i64).collect() });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn from_i64(parts: &[i64]) -> Result<Self> {
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::NegativePart { parts: parts.to_vec() });
        }
        if parts.iter().any(|&p| p > u32::MAX as i64) {
            return Err(Error::NotDecreasing { parts: parts.to_vec() });
        }
        Partition::new(parts.iter().map(|&p| p as u32).collect::<Vec<_>>())
    }

    /// Sorts arbitrary nonnegative entries into a partition.
    pub fn from_unsorted(entries: &[i64]) -> Result<Self> {
        let mut v = entries.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_i64(&v)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> u32 {
        self.part(0)
    }

    /// Number of parts equal to `j`; `j = 0` counts the zero padding up to `k`.
    pub fn multiplicity(&self, j: u32, k: usize) -> usize {
        if j == 0 {
            k.saturating_sub(self.len())
        } else {
            self.parts.iter().filter(|&&p| p == j).count()
        }
    }

    /// Young diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// The `k`-tuple `(λ_1, …, λ_k)` padded with zeros.
    pub fn padded(&self, k: usize) -> Result<Vec<i64>> {
        if self.len() > k {
            return Err(Error::TooManyParts { partition: self.clone(), k });
        }
        let mut v: Vec<i64> = self.parts.iter().map(|&p| p as i64).collect();
        v.resize(k, 0);
        Ok(v)
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    /// Every partition of `size` with at most `max_len` parts, each at most
    /// `max_part`, in lexicographically decreasing order.
    pub fn all_of_size(size: u64, max_len: usize, max_part: u32) -> Vec<Partition> {
        fn rec(rem: u64, max_len: usize, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if max_len == 0 {
                return;
            }
            // the remaining parts can hold at most max_len * max_part
            if (max_len as u64).saturating_mul(max_part as u64) < rem {
                return;
            }
            let top = max_part.min(rem.min(u32::MAX as u64) as u32);
            for p in (1..=top).rev() {
                cur.push(p);
                rec(rem - p as u64, max_len - 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, max_len, max_part, &mut Vec::new(), &mut out);
        out
    }

    /// Every partition whose diagram fits in a `max_len × max_part` box.
    pub fn all_in_box(max_len: usize, max_part: u32) -> Vec<Partition> {
        let top = max_len as u64 * max_part as u64;
        (0..=top).flat_map(|s| Partition::all_of_size(s, max_len, max_part)).collect()
    }

    /// Every partition `ν` with `inner ⊆ ν ⊆ outer` and `|ν| = size`.
    pub fn between(inner: &Partition, outer: &Partition, size: u64) -> Vec<Partition> {
        fn rec(i: usize, rem: u64, inner: &Partition, outer: &Partition, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                if rem == 0 {
                    out.push(Partition::new(cur.clone()).expect("built decreasing"));
                }
                return;
            }
            let cap = if i == 0 { outer.part(0) } else { outer.part(i).min(cur[i - 1]) };
            let lo = inner.part(i);
            if lo > cap {
                return;
            }
            // remaining rows can add at most the outer row lengths
            let tail: u64 = (i + 1..outer.len()).map(|j| outer.part(j) as u64).sum();
            for p in (lo..=cap).rev() {
                if p as u64 > rem {
                    continue;
                }
                if rem - p as u64 > tail {
                    break;
                }
                cur.push(p);
                rec(i + 1, rem - p as u64, inner, outer, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if !outer.contains(inner) {
            return out;
        }
        rec(0, size, inner, outer, &mut Vec::new(), &mut out);
        out
    }
}

/// Column lengths `λ'_j = #{i : λ_i ≥ j}`.
pub fn conjugate(lambda: &Partition) -> Partition {
    let parts = (1..=lambda.largest()).map(|j| lambda.parts.iter().filter(|&&p| p >= j).count() as u32).collect();
    Partition { parts }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on parts.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
