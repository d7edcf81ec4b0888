//! Cylindric reverse plane partitions: chains of cylindric loops inside the
//! alcove, their binomial weights, and the cylindric complete symmetric
//! functions `h_{λ/d/μ}`.

use std::collections::{HashMap, HashSet};
use std::sync::Mutex;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::affine::{alcove, cylindric_contains, AffinePermutation, LoopFunction};
use crate::symcore::{binomial, distinct_permutations};
use crate::{Error, Int, MExpansion, Partition, Result};

/// One loop of a cylindric chain: the alcove partition and its offset `d_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainLoop {
    #[serde(rename = "loop")]
    pub partition: Partition,
    pub offset: u64,
}

/// A cylindric reverse plane partition as the sequence of loops
/// `μ[0], λ^(1)[d_1], …, λ[d]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CylChain {
    loops: Vec<ChainLoop>,
    #[serde(skip)]
    n: usize,
}

impl CylChain {
    pub fn loops(&self) -> &[ChainLoop] {
        &self.loops
    }

    /// `θ_i = n(d_i − d_{i−1}) + |λ^(i)| − |λ^(i−1)|`.
    pub fn weight(&self) -> Vec<u64> {
        self.loops
            .windows(2)
            .map(|w| {
                let delta = w[1].offset - w[0].offset;
                self.n as u64 * delta + w[1].partition.size() - w[0].partition.size()
            })
            .collect()
    }
}

/// Cylindric computations at fixed `(k, n)`, memoising `χ_{λ/d/μ}`.
pub struct CylindricRpp {
    k: usize,
    n: usize,
    alcove: Vec<Partition>,
    chi_memo: Mutex<HashMap<(Partition, u64, Partition), Int>>,
}

impl CylindricRpp {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::NonPositive { name: "k" });
        }
        if n == 0 {
            return Err(Error::NonPositive { name: "n" });
        }
        Ok(CylindricRpp { k, n, alcove: alcove(k, n), chi_memo: Mutex::new(HashMap::new()) })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alcove(&self) -> &[Partition] {
        &self.alcove
    }

    fn alcove_loop(&self, p: &Partition) -> Result<LoopFunction> {
        LoopFunction::from_alcove(p, self.k, self.n)
    }

    /// `χ_{λ/d/μ}` as the difference of two binomial products over loop
    /// conjugates (zero-if-negative convention).
    pub fn chi(&self, lambda: &Partition, d: u64, mu: &Partition) -> Result<Int> {
        let key = (lambda.clone(), d, mu.clone());
        if let Some(v) = self.chi_memo.lock().expect("memo lock").get(&key) {
            return Ok(v.clone());
        }
        let lam = self.alcove_loop(lambda)?;
        let mu_conj = self.alcove_loop(mu)?.conjugate();
        let product = |shift: i64| -> Int {
            let top = lam.shift(shift).conjugate();
            (1..=self.n as i64).fold(Int::one(), |acc, j| {
                let next = mu_conj.eval(j + 1);
                acc * binomial(top.eval(j) - next, mu_conj.eval(j) - next)
            })
        };
        let v = product(d as i64) - product(d as i64 - 1);
        self.chi_memo.lock().expect("memo lock").insert(key, v.clone());
        Ok(v)
    }

    /// Default band for [`chi_by_count_with_bound`](Self::chi_by_count_with_bound):
    /// `2 + ⌈(λ_1 + nd)/n⌉`.
    pub fn default_bound(&self, lambda: &Partition, d: u64) -> i64 {
        let n = self.n as i64;
        2 + (lambda.largest() as i64 + n * d as i64 + n - 1).div_euclid(n)
    }

    /// `#{w̃ ∈ S̃^μ : μ∘w̃ ≤ λ∘τ^d}` by direct search.
    pub fn chi_by_count(&self, lambda: &Partition, d: u64, mu: &Partition) -> Result<Int> {
        self.chi_by_count_with_bound(lambda, d, mu, self.default_bound(lambda, d))
    }

    /// Searches affine permutations `w̃ ∈ S̃_k` with `|w̃(i) − i| ≤ Bk` and
    /// counts the distinct functions `μ∘w̃` (one per coset `S_μ w̃`) lying
    /// below `λ∘τ^d`.
    pub fn chi_by_count_with_bound(&self, lambda: &Partition, d: u64, mu: &Partition, bound: i64) -> Result<Int> {
        let top = self.alcove_loop(lambda)?.shift(d as i64);
        let base = self.alcove_loop(mu)?;
        let k = self.k as i64;
        let residues: Vec<i64> = (1..=k).collect();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        for perm in distinct_permutations(&residues) {
            // offsets q_i with w̃(i) = perm_i + k q_i inside the band
            let ranges: Vec<(i64, i64)> = perm
                .iter()
                .enumerate()
                .map(|(i, &r)| {
                    let pos = i as i64 + 1;
                    let lo = (pos - bound * k - r).div_euclid(k) + 1;
                    let hi = (pos + bound * k - r).div_euclid(k);
                    (lo.min(hi), hi)
                })
                .collect();
            let mut q = vec![0i64; self.k];
            visit_offsets(&ranges, 0, 0, &mut q, &mut |q| {
                let window: Vec<i64> = perm.iter().zip(q).map(|(&r, &qi)| r + k * qi).collect();
                let w = AffinePermutation::new(window).expect("residues form a permutation");
                debug_assert!(w.is_unextended());
                let image = base.act(&w).expect("same period");
                if image.le(&top).expect("same level") {
                    seen.insert(image.window().to_vec());
                }
            });
        }
        Ok(Int::from(seen.len()))
    }

    /// All cylindric chains from `μ[0]` to `λ[d]` with step cell counts `θ`.
    pub fn chains(&self, lambda: &Partition, d: u64, mu: &Partition, theta: &[u64]) -> Result<Vec<CylChain>> {
        self.alcove_loop(lambda)?;
        self.alcove_loop(mu)?;
        let mut out = Vec::new();
        let mut cur = vec![ChainLoop { partition: mu.clone(), offset: 0 }];
        self.extend_chain(lambda, d, theta, &mut cur, &mut out)?;
        Ok(out)
    }

    fn extend_chain(
        &self,
        lambda: &Partition,
        d: u64,
        theta: &[u64],
        cur: &mut Vec<ChainLoop>,
        out: &mut Vec<CylChain>,
    ) -> Result<()> {
        let last = cur.last().expect("nonempty").clone();
        let Some((&t, rest)) = theta.split_first() else {
            if last.partition == *lambda && last.offset == d {
                out.push(CylChain { loops: cur.clone(), n: self.n });
            }
            return Ok(());
        };
        for (next, delta) in self.successors(&last.partition, t, d - last.offset)? {
            cur.push(ChainLoop { partition: next, offset: last.offset + delta });
            self.extend_chain(lambda, d, rest, cur, out)?;
            cur.pop();
        }
        Ok(())
    }

    /// Loops `κ'[δ]` containing `κ[0]` with exactly `cells` strip cells and
    /// `δ ≤ max_delta`.
    fn successors(&self, from: &Partition, cells: u64, max_delta: u64) -> Result<Vec<(Partition, u64)>> {
        let n = self.n as i64;
        let inner = self.alcove_loop(from)?;
        let mut out = Vec::new();
        for next in &self.alcove {
            let num = cells as i64 - next.size() as i64 + from.size() as i64;
            if num < 0 || num % n != 0 {
                continue;
            }
            let delta = (num / n) as u64;
            if delta > max_delta {
                continue;
            }
            let outer = self.alcove_loop(next)?.shift(delta as i64);
            if cylindric_contains(&inner, &outer)? {
                out.push((next.clone(), delta));
            }
        }
        Ok(out)
    }

    /// `Σ_π̂ χ_π̂` over cylindric chains of shape `λ/d/μ` and weight `θ`
    /// (any length, zero entries allowed).
    pub fn weighted_count(&self, lambda: &Partition, d: u64, mu: &Partition, theta: &[u64]) -> Result<Int> {
        self.alcove_loop(lambda)?;
        self.alcove_loop(mu)?;
        let total: u64 = theta.iter().sum();
        if total as i64 != self.n as i64 * d as i64 + lambda.size() as i64 - mu.size() as i64 {
            return Ok(Int::zero());
        }
        let mut layer: HashMap<(Partition, u64), Int> = HashMap::from([((mu.clone(), 0), Int::one())]);
        for &t in theta {
            let mut next: HashMap<(Partition, u64), Int> = HashMap::new();
            for ((p, e), w) in &layer {
                for (q, delta) in self.successors(p, t, d - e)? {
                    let c = self.chi(&q, delta, p)?;
                    if !c.is_zero() {
                        *next.entry((q, e + delta)).or_insert_with(Int::zero) += w * c;
                    }
                }
            }
            layer = next;
        }
        Ok(layer.remove(&(lambda.clone(), d)).unwrap_or_else(Int::zero))
    }

    /// `χ_{λ/d/μ}(ν)`, the coefficient of `m_ν` in `h_{λ/d/μ}`; zero on a
    /// degree mismatch or when `ν` has more than `k` parts.
    pub fn coefficient(&self, lambda: &Partition, d: u64, mu: &Partition, nu: &Partition) -> Result<Int> {
        if nu.len() > self.k {
            self.alcove_loop(lambda)?;
            self.alcove_loop(mu)?;
            return Ok(Int::zero());
        }
        let theta: Vec<u64> = nu.parts().iter().map(|&p| p as u64).collect();
        self.weighted_count(lambda, d, mu, &theta)
    }

    /// `h_{λ/d/μ}` in `k` variables.
    pub fn expansion(&self, lambda: &Partition, d: u64, mu: &Partition) -> Result<MExpansion<Int>> {
        self.expansion_in_variables(lambda, d, mu, self.k)
    }

    /// `h_{λ/d/μ}` in an arbitrary number of variables.
    pub fn expansion_in_variables(
        &self,
        lambda: &Partition,
        d: u64,
        mu: &Partition,
        vars: usize,
    ) -> Result<MExpansion<Int>> {
        self.alcove_loop(lambda)?;
        self.alcove_loop(mu)?;
        let deg = self.n as i64 * d as i64 + lambda.size() as i64 - mu.size() as i64;
        if deg < 0 {
            return Ok(MExpansion::zero(vars));
        }
        let deg = deg as u64;
        let mut out = MExpansion::zero(vars);
        for nu in Partition::all_of_size(deg, vars, deg as u32) {
            let theta: Vec<u64> = nu.parts().iter().map(|&p| p as u64).collect();
            let c = self.weighted_count(lambda, d, mu, &theta)?;
            out.add_term(nu, c);
        }
        Ok(out)
    }
}

fn visit_offsets(ranges: &[(i64, i64)], i: usize, sum: i64, q: &mut Vec<i64>, f: &mut dyn FnMut(&[i64])) {
    if i == ranges.len() {
        if sum == 0 {
            f(q);
        }
        return;
    }
    // the remaining offsets must be able to bring the sum back to zero
    let rest_lo: i64 = ranges[i + 1..].iter().map(|r| r.0).sum();
    let rest_hi: i64 = ranges[i + 1..].iter().map(|r| r.1).sum();
    for v in ranges[i].0..=ranges[i].1 {
        let s = sum + v;
        if s + rest_lo > 0 || s + rest_hi < 0 {
            continue;
        }
        q[i] = v;
        visit_offsets(ranges, i + 1, s, q, f);
    }
}

/// `χ_{λ/d/μ}` through loop conjugates.
pub fn chi_cyl(lambda: &Partition, d: u64, mu: &Partition, k: usize, n: usize) -> Result<Int> {
    CylindricRpp::new(k, n)?.chi(lambda, d, mu)
}

/// `χ_{λ/d/μ}` by counting affine permutations.
pub fn chi_cyl_by_count(lambda: &Partition, d: u64, mu: &Partition, k: usize, n: usize) -> Result<Int> {
    CylindricRpp::new(k, n)?.chi_by_count(lambda, d, mu)
}

pub fn enumerate_cyl_chains(
    lambda: &Partition,
    d: u64,
    mu: &Partition,
    theta: &[u64],
    k: usize,
    n: usize,
) -> Result<Vec<CylChain>> {
    CylindricRpp::new(k, n)?.chains(lambda, d, mu, theta)
}

pub fn cyl_h_coefficient(
    lambda: &Partition,
    d: u64,
    mu: &Partition,
    nu: &Partition,
    k: usize,
    n: usize,
) -> Result<Int> {
    CylindricRpp::new(k, n)?.coefficient(lambda, d, mu, nu)
}

pub fn cyl_h_expansion(lambda: &Partition, d: u64, mu: &Partition, k: usize, n: usize) -> Result<MExpansion<Int>> {
    CylindricRpp::new(k, n)?.expansion(lambda, d, mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::rppgen::h_skew_expansion;
    use crate::symcore::chi_skew;

    #[test]
    fn example_shape_weight() {
        let rpp = CylindricRpp::new(3, 4).unwrap();
        let (l, m) = (partition![4, 3, 2], partition![2, 2, 1]);
        // both routes give 9 for this shape
        assert_eq!(rpp.chi(&l, 1, &m).unwrap(), Int::from(9));
        assert_eq!(rpp.chi_by_count(&l, 1, &m).unwrap(), Int::from(9));
        let chains = rpp.chains(&l, 1, &m, &[4, 3, 1]).unwrap();
        assert!(!chains.is_empty());
        for c in &chains {
            assert_eq!(c.weight(), vec![4, 3, 1]);
            assert_eq!(c.loops().last().unwrap().offset, 1);
        }
    }

    #[test]
    fn chi_edge_cases() {
        let rpp = CylindricRpp::new(2, 3).unwrap();
        let l = partition![3, 1];
        assert_eq!(rpp.chi(&l, 0, &l).unwrap(), Int::one());
        assert_eq!(rpp.chi_by_count(&l, 0, &l).unwrap(), Int::one());
        // (2,1)[0] does not fit under (1,1)[0]
        assert_eq!(rpp.chi(&partition![1, 1], 0, &partition![2, 1]).unwrap(), Int::zero());
        assert!(matches!(rpp.chi(&partition![4, 1], 0, &l), Err(Error::NotInAlcove { .. })));
        assert!(rpp.chi(&partition![1], 0, &l).is_err());
    }

    #[test]
    fn degree_zero_reduces_to_flat_chi() {
        for (k, n) in [(2usize, 3usize), (3, 3)] {
            let rpp = CylindricRpp::new(k, n).unwrap();
            for l in rpp.alcove() {
                for m in rpp.alcove() {
                    assert_eq!(rpp.chi(l, 0, m).unwrap(), chi_skew(l, m), "{l} {m}");
                }
            }
        }
    }

    #[test]
    fn single_step_chains() {
        let rpp = CylindricRpp::new(2, 3).unwrap();
        for l in rpp.alcove() {
            for m in rpp.alcove() {
                for d in 0..2u64 {
                    let deg = 3 * d as i64 + l.size() as i64 - m.size() as i64;
                    if deg <= 0 {
                        continue;
                    }
                    let chains = rpp.chains(l, d, m, &[deg as u64]).unwrap();
                    let contained = LoopFunction::from_alcove(m, 2, 3)
                        .unwrap()
                        .le(&LoopFunction::from_alcove(l, 2, 3).unwrap().shift(d as i64))
                        .unwrap();
                    assert_eq!(chains.len(), contained as usize);
                }
            }
        }
    }

    #[test]
    fn impossible_weight_has_no_chains() {
        let rpp = CylindricRpp::new(2, 3).unwrap();
        assert!(rpp.chains(&partition![3, 3], 0, &partition![1, 1], &[5, 0]).unwrap().is_empty());
        assert!(rpp.chains(&partition![3, 3], 0, &partition![1, 1], &[2, 1]).unwrap().is_empty());
    }

    #[test]
    fn degree_zero_expansion_is_flat_skew() {
        let rpp = CylindricRpp::new(3, 3).unwrap();
        for l in rpp.alcove() {
            for m in rpp.alcove() {
                let cyl = rpp.expansion(l, 0, m).unwrap();
                assert_eq!(cyl, h_skew_expansion(l, m, 3), "{l}/{m}");
            }
        }
        let l = partition![2, 2, 1];
        assert_eq!(rpp.expansion(&l, 0, &l).unwrap(), MExpansion::one(3));
    }

    #[test]
    fn coefficient_edge_cases() {
        let rpp = CylindricRpp::new(2, 3).unwrap();
        let (l, m) = (partition![3, 2], partition![1, 1]);
        assert_eq!(rpp.coefficient(&l, 1, &m, &partition![2]).unwrap(), Int::zero());
        assert_eq!(rpp.coefficient(&l, 1, &m, &partition![2, 2, 2, 0]).unwrap(), Int::zero());
        let e = rpp.expansion(&l, 1, &m).unwrap();
        assert!(e.is_homogeneous(6));
        assert!(!e.is_zero());
    }

    #[test]
    fn coefficients_are_symmetric_in_weight_order() {
        let rpp = CylindricRpp::new(3, 4).unwrap();
        let (l, m) = (partition![4, 3, 2], partition![2, 2, 1]);
        let base = rpp.weighted_count(&l, 1, &m, &[4, 3, 1]).unwrap();
        assert!(!base.is_zero());
        for theta in [[4, 1, 3], [3, 4, 1], [3, 1, 4], [1, 4, 3], [1, 3, 4]] {
            assert_eq!(rpp.weighted_count(&l, 1, &m, &theta).unwrap(), base);
        }
    }

    #[test]
    fn chain_sum_matches_dp() {
        let rpp = CylindricRpp::new(2, 3).unwrap();
        let (l, m) = (partition![2, 1], partition![3, 1]);
        for theta in [[2u64, 2, 1], [1, 2, 2], [3, 1, 1], [4, 1, 0]] {
            let chains = rpp.chains(&l, 1, &m, &theta).unwrap();
            let mut by_chain = Int::zero();
            for c in &chains {
                let mut w = Int::one();
                for pair in c.loops().windows(2) {
                    w *= rpp.chi(&pair[1].partition, pair[1].offset - pair[0].offset, &pair[0].partition).unwrap();
                }
                by_chain += w;
            }
            assert_eq!(by_chain, rpp.weighted_count(&l, 1, &m, &theta).unwrap(), "{theta:?}");
        }
    }

    #[test]
    fn chain_json_form() {
        let chains = enumerate_cyl_chains(&partition![3, 1], 0, &partition![1, 1], &[2], 2, 3).unwrap();
        assert_eq!(
            serde_json::to_string(&chains[0]).unwrap(),
            r#"[{"loop":[1,1],"offset":0},{"loop":[3,1],"offset":0}]"#
        );
    }
}
