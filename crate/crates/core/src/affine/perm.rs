use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A bijection `ŵ : ℤ → ℤ` with `ŵ(m + k) = ŵ(m) + k`, stored by its window
/// `(ŵ(1), …, ŵ(k))`.
///
/// JSON form: `{"k":2,"window":[2,1]}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPermutation")]
pub struct AffinePermutation {
    k: usize,
    window: Vec<i64>,
}

#[derive(Deserialize)]
struct RawPermutation {
    k: usize,
    window: Vec<i64>,
}

impl TryFrom<RawPermutation> for AffinePermutation {
    type Error = Error;
    fn try_from(raw: RawPermutation) -> Result<Self> {
        if raw.window.len() != raw.k {
            return Err(Error::WindowLength { len: raw.window.len(), k: raw.k });
        }
        AffinePermutation::new(raw.window)
    }
}

impl AffinePermutation {
    /// Validates that the window residues mod `k` are a permutation.
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let k = window.len();
        if k == 0 {
            return Err(Error::NonPositive { name: "k" });
        }
        let mut seen = vec![false; k];
        for &w in &window {
            let r = w.rem_euclid(k as i64) as usize;
            if seen[r] {
                return Err(Error::NotBijective { window, k });
            }
            seen[r] = true;
        }
        Ok(AffinePermutation { k, window })
    }

    pub fn identity(k: usize) -> Self {
        AffinePermutation { k, window: (1..=k as i64).collect() }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &w)| w == i as i64 + 1)
    }

    /// `ŵ(m)` for any `m ∈ ℤ`.
    pub fn eval(&self, m: i64) -> i64 {
        let k = self.k as i64;
        let q = (m - 1).div_euclid(k);
        let r = (m - 1).rem_euclid(k) as usize;
        self.window[r] + q * k
    }

    /// `(self ∘ other)(m) = self(other(m))`.
    pub fn compose(&self, other: &AffinePermutation) -> Result<AffinePermutation> {
        if self.k != other.k {
            return Err(Error::PeriodMismatch { left: self.k, right: other.k });
        }
        Ok(AffinePermutation { k: self.k, window: other.window.iter().map(|&m| self.eval(m)).collect() })
    }

    pub fn inverse(&self) -> AffinePermutation {
        let k = self.k as i64;
        let mut window = vec![0; self.k];
        for (i, &w) in self.window.iter().enumerate() {
            let r = (w - 1).rem_euclid(k);
            let q = (w - 1).div_euclid(k);
            window[r as usize] = i as i64 + 1 - q * k;
        }
        AffinePermutation { k: self.k, window }
    }

    /// `self^e`, negative exponents through the inverse.
    pub fn pow(&self, e: i64) -> AffinePermutation {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = AffinePermutation::identity(self.k);
        for _ in 0..e.unsigned_abs() {
            acc = acc.compose(&base).expect("same period");
        }
        acc
    }

    pub fn window_sum(&self) -> i64 {
        self.window.iter().sum()
    }

    /// Membership in the non-extended group `S̃_k`: the window sums to
    /// `1 + 2 + … + k`.
    pub fn is_unextended(&self) -> bool {
        let k = self.k as i64;
        self.window_sum() == k * (k + 1) / 2
    }

    /// The extended-group condition `Σ ŵ(m) ≡ C(k, 2) mod k`; holds for
    /// every valid window.
    pub fn satisfies_extended_condition(&self) -> bool {
        let k = self.k as i64;
        (self.window_sum() - k * (k - 1) / 2).rem_euclid(k) == 0
    }

    /// The simple reflection `σ_i`, `0 ≤ i < k`, swapping the residue
    /// classes of `i` and `i + 1`.
    pub fn sigma(i: usize, k: usize) -> Result<AffinePermutation> {
        if k < 2 || i >= k {
            return Err(Error::InvalidGenerator { index: i, k });
        }
        let kk = k as i64;
        let window = (1..=kk)
            .map(|m| {
                let r = m.rem_euclid(kk);
                if r == i as i64 {
                    m + 1
                } else if r == (i as i64 + 1).rem_euclid(kk) {
                    m - 1
                } else {
                    m
                }
            })
            .collect();
        Ok(AffinePermutation { k, window })
    }

    /// The shift `τ(m) = m − 1`.
    pub fn tau(k: usize) -> AffinePermutation {
        AffinePermutation { k, window: (0..k as i64).collect() }
    }

    /// Translation generator `y_i`, `1 ≤ i ≤ k`: `y_k = τ∘σ_1∘⋯∘σ_{k−1}` and
    /// `y_i = σ_i∘y_{i+1}∘σ_i`.
    pub fn y_generator(i: usize, k: usize) -> Result<AffinePermutation> {
        if i == 0 || i > k {
            return Err(Error::InvalidGenerator { index: i, k });
        }
        let mut y = AffinePermutation::tau(k);
        for j in 1..k {
            y = y.compose(&AffinePermutation::sigma(j, k)?)?;
        }
        for j in (i..k).rev() {
            let s = AffinePermutation::sigma(j, k)?;
            y = s.compose(&y)?.compose(&s)?;
        }
        Ok(y)
    }

    /// `y^α = y_1^{α_1} ∘ ⋯ ∘ y_k^{α_k}`.
    pub fn y_power(alpha: &[i64]) -> Result<AffinePermutation> {
        let k = alpha.len();
        let mut acc = AffinePermutation::identity(k);
        for (i, &a) in alpha.iter().enumerate() {
            acc = acc.compose(&AffinePermutation::y_generator(i + 1, k)?.pow(a))?;
        }
        Ok(acc)
    }
}

impl fmt::Debug for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.window.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(v: &[i64]) -> AffinePermutation {
        AffinePermutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(AffinePermutation::sigma(1, 2).unwrap().window(), &[2, 1]);
        assert_eq!(AffinePermutation::sigma(0, 3).unwrap().window(), &[0, 2, 4]);
        assert_eq!(AffinePermutation::sigma(0, 2).unwrap().window(), &[0, 3]);
        assert!(AffinePermutation::sigma(0, 1).is_err());
        assert!(AffinePermutation::sigma(3, 3).is_err());
    }

    #[test]
    fn tau_and_inverse() {
        assert_eq!(AffinePermutation::tau(2).window(), &[0, 1]);
        let u = w(&[5, -3, 4]);
        assert!(u.compose(&u.inverse()).unwrap().is_identity());
        assert!(u.inverse().compose(&u).unwrap().is_identity());
        assert!(AffinePermutation::new(vec![1, 3]).is_err());
        assert!(u.compose(&AffinePermutation::identity(2)).is_err());
    }

    #[test]
    fn coxeter_relations() {
        for k in 2..=4 {
            let s: Vec<_> = (0..k).map(|i| AffinePermutation::sigma(i, k).unwrap()).collect();
            let tau = AffinePermutation::tau(k);
            for i in 0..k {
                let si = &s[i];
                let sj = &s[(i + 1) % k];
                assert!(si.compose(si).unwrap().is_identity());
                assert_eq!(tau.compose(sj).unwrap(), si.compose(&tau).unwrap(), "τσ_(i+1) = σ_iτ, k={k}");
                if k >= 3 {
                    let lhs = si.compose(sj).unwrap().compose(si).unwrap();
                    let rhs = sj.compose(si).unwrap().compose(sj).unwrap();
                    assert_eq!(lhs, rhs, "braid k={k} i={i}");
                }
                for (j, sj) in s.iter().enumerate() {
                    let dist = (i as i64 - j as i64).rem_euclid(k as i64);
                    if dist > 1 && dist < k as i64 - 1 {
                        assert_eq!(si.compose(sj).unwrap(), sj.compose(si).unwrap());
                    }
                }
                assert!(si.is_unextended());
            }
        }
    }

    #[test]
    fn y_generators() {
        assert_eq!(AffinePermutation::y_generator(1, 1).unwrap().window(), &[0]);
        assert_eq!(AffinePermutation::y_generator(2, 2).unwrap().window(), &[1, 0]);
        assert_eq!(AffinePermutation::y_generator(1, 2).unwrap().window(), &[-1, 2]);
        for k in 1..=4 {
            let ys: Vec<_> = (1..=k).map(|i| AffinePermutation::y_generator(i, k).unwrap()).collect();
            for (i, yi) in ys.iter().enumerate() {
                // y_i moves only position i, by −k
                for m in 1..=k as i64 {
                    let expect = if m == i as i64 + 1 { m - k as i64 } else { m };
                    assert_eq!(yi.eval(m), expect);
                }
                for yj in &ys {
                    assert_eq!(yi.compose(yj).unwrap(), yj.compose(yi).unwrap());
                }
            }
        }
    }

    #[test]
    fn y_power_is_translation() {
        let y = AffinePermutation::y_power(&[2, -1, 0]).unwrap();
        assert_eq!(y.window(), &[1 - 6, 2 + 3, 3]);
    }

    fn generator_word(k: usize) -> impl Strategy<Value = Vec<usize>> {
        prop::collection::vec(0..=k, 0..=8)
    }

    proptest! {
        #[test]
        fn words_satisfy_extended_conditions((k, word) in (1usize..=4).prop_flat_map(|k| (Just(k), generator_word(k)))) {
            let mut acc = AffinePermutation::identity(k);
            for g in word {
                let gen = if g == k || k == 1 { AffinePermutation::tau(k) } else { AffinePermutation::sigma(g, k).unwrap() };
                acc = acc.compose(&gen).unwrap();
            }
            prop_assert!(AffinePermutation::new(acc.window().to_vec()).is_ok());
            prop_assert!(acc.satisfies_extended_condition());
            for m in -10..10 {
                prop_assert_eq!(acc.eval(m + k as i64), acc.eval(m) + k as i64);
            }
        }
    }

    #[test]
    fn json_form() {
        let s = AffinePermutation::sigma(1, 2).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"k":2,"window":[2,1]}"#);
        let back: AffinePermutation = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<AffinePermutation>(r#"{"k":2,"window":[1,3]}"#).is_err());
        assert!(serde_json::from_str::<AffinePermutation>(r#"{"k":3,"window":[2,1]}"#).is_err());
    }
}
