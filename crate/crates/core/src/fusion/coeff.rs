//! Fusion coefficients `N_{μν}^λ` from pairs of rearrangements and affine
//! translations, and their reduction to alcove weights.

use std::collections::{HashMap, HashSet};

use num_traits::Zero;

use crate::affine::{AffinePermutation, LoopFunction};
use crate::symcore::{distinct_rearrangements, multinomial};
use crate::{Int, Partition, Result};

/// `(|μ| + |ν| − |λ|)/n` when it is a nonnegative integer.
pub fn degree_shift(mu: &Partition, nu: &Partition, lambda: &Partition, n: usize) -> Option<u64> {
    let t = mu.size() as i64 + nu.size() as i64 - lambda.size() as i64;
    (t >= 0 && t % n as i64 == 0).then(|| (t / n as i64) as u64)
}

/// Default bound on each `|α_i|`: `2 + ⌈(μ_1 + ν_1 + n)/n⌉`.
pub fn alpha_bound(mu: &Partition, nu: &Partition, n: usize) -> i64 {
    let n = n as i64;
    2 + (mu.largest() as i64 + nu.largest() as i64 + 2 * n - 1).div_euclid(n)
}

/// Windows of `λ∘y^α` for `α_i ∈ [−B, B]`, `Σα_i = d`, each composed
/// literally from the translation generators.
pub fn translated_windows(lambda: &LoopFunction, d: i64, bound: i64) -> Result<HashSet<Vec<i64>>> {
    let k = lambda.k();
    let mut out = HashSet::new();
    let mut alpha = vec![0i64; k];
    let mut err = None;
    visit_alpha(&mut alpha, 0, d, bound, &mut |a| {
        if err.is_some() {
            return;
        }
        match AffinePermutation::y_power(a).and_then(|y| lambda.act(&y)) {
            Ok(l) => {
                out.insert(l.window().to_vec());
            }
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

fn visit_alpha(alpha: &mut Vec<i64>, i: usize, rest: i64, bound: i64, f: &mut dyn FnMut(&[i64])) {
    let k = alpha.len();
    if i + 1 == k {
        if rest.abs() <= bound {
            alpha[i] = rest;
            f(alpha);
        }
        return;
    }
    let left = (k - i - 1) as i64;
    for v in -bound..=bound {
        if (rest - v).abs() <= left * bound {
            alpha[i] = v;
            visit_alpha(alpha, i + 1, rest - v, bound, f);
        }
    }
}

fn check_alcove(p: &Partition, k: usize, n: usize) -> Result<LoopFunction> {
    LoopFunction::from_alcove(p, k, n)
}

/// `N_{μν}^λ = #{(w, w') ∈ S^μ × S^ν : μ∘w + ν∘w' = λ∘y^α, |α| = d}` with
/// `d = (|μ| + |ν| − |λ|)/n`; zero if `d` is not a nonnegative integer.
pub fn n_coefficient(mu: &Partition, nu: &Partition, lambda: &Partition, k: usize, n: usize) -> Result<Int> {
    n_coefficient_with_bound(mu, nu, lambda, k, n, alpha_bound(mu, nu, n))
}

/// [`n_coefficient`] with an explicit bound on `|α_i|`.
pub fn n_coefficient_with_bound(
    mu: &Partition,
    nu: &Partition,
    lambda: &Partition,
    k: usize,
    n: usize,
    bound: i64,
) -> Result<Int> {
    let lam = check_alcove(lambda, k, n)?;
    check_alcove(mu, k, n)?;
    if nu.len() > k {
        return Ok(Int::zero());
    }
    let Some(d) = degree_shift(mu, nu, lambda, n) else {
        return Ok(Int::zero());
    };
    let targets = translated_windows(&lam, d as i64, bound)?;
    count_pairs(mu, nu, k, &targets)
}

pub(crate) fn count_pairs(mu: &Partition, nu: &Partition, k: usize, targets: &HashSet<Vec<i64>>) -> Result<Int> {
    let nus = distinct_rearrangements(nu, k)?;
    let mut count = 0usize;
    for a in distinct_rearrangements(mu, k)? {
        for b in &nus {
            let s: Vec<i64> = a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
            if targets.contains(&s) {
                count += 1;
            }
        }
    }
    Ok(Int::from(count))
}

/// Reduction of a weight `ν` (at most `k` parts) to its alcove representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    /// The alcove point `ν̌` in the orbit of `ν`.
    pub reduced: Partition,
    /// `∏_i C(m_i(ν̌); m_j(ν) : j ≡ i mod n)`, counting `m_0(ν)` in the class of `n`.
    pub factor: Int,
    /// `(|ν| − |ν̌|)/n`.
    pub z_shift: i64,
}

/// Computes `ν̌`, the multinomial factor and the `z` shift for `ν`.
pub fn reduce_weight(nu: &Partition, k: usize, n: usize) -> Result<Reduction> {
    let (reduced, _) = LoopFunction::from_partition(nu, k, n)?.reduce_to_alcove();
    let padded = nu.padded(k)?;
    let n64 = n as i64;
    let mut mult: HashMap<i64, u64> = HashMap::new();
    for v in padded {
        *mult.entry(v).or_insert(0) += 1;
    }
    let mut factor = Int::from(1);
    for i in 1..=n as u32 {
        let top = reduced.multiplicity(i, k) as u64;
        let parts: Vec<u64> =
            mult.iter().filter(|(j, _)| (*j - i as i64).rem_euclid(n64) == 0).map(|(_, m)| *m).collect();
        factor *= multinomial(top, &parts);
    }
    let z_shift = (nu.size() as i64 - reduced.size() as i64) / n64;
    Ok(Reduction { reduced, factor, z_shift })
}

/// `N_{μν}^λ` through the alcove representative: `N_{μν̌}^λ` times the
/// multinomial factor of [`reduce_weight`].
pub fn n_reduced(mu: &Partition, nu: &Partition, lambda: &Partition, k: usize, n: usize) -> Result<Int> {
    check_alcove(lambda, k, n)?;
    check_alcove(mu, k, n)?;
    if nu.len() > k || degree_shift(mu, nu, lambda, n).is_none() {
        return Ok(Int::zero());
    }
    let r = reduce_weight(nu, k, n)?;
    if r.factor.is_zero() {
        return Ok(Int::zero());
    }
    Ok(n_coefficient(mu, &r.reduced, lambda, k, n)? * r.factor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::alcove;
    use crate::partition;
    use crate::symcore::f_coefficient;

    #[test]
    fn level_one_is_cyclic() {
        let n3 = |a: u32, b: u32, c: u32| n_coefficient(&partition![a], &partition![b], &partition![c], 1, 3).unwrap();
        assert_eq!(n3(1, 2, 3), Int::from(1));
        assert_eq!(n3(2, 2, 1), Int::from(1));
        assert_eq!(n3(2, 2, 3), Int::zero());
    }

    #[test]
    fn degree_zero_is_f_coefficient() {
        let (k, n) = (3, 3);
        let a = alcove(k, n);
        for mu in &a {
            for nu in &a {
                for lam in &a {
                    if mu.size() + nu.size() == lam.size() {
                        assert_eq!(n_coefficient(mu, nu, lam, k, n).unwrap(), f_coefficient(mu, nu, lam, k).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn degree_mismatch_and_errors() {
        let (l, m) = (partition![3, 1], partition![2, 1]);
        assert_eq!(n_coefficient(&m, &partition![2], &l, 2, 3).unwrap(), Int::zero());
        assert!(n_coefficient(&partition![4, 1], &partition![1], &l, 2, 3).is_err());
        assert!(n_coefficient(&m, &partition![1], &partition![1], 2, 3).is_err());
        assert!(n_reduced(&m, &partition![1], &partition![1], 2, 3).is_err());
    }

    #[test]
    fn reduction_factor_example() {
        let r = reduce_weight(&partition![4, 1], 2, 3).unwrap();
        assert_eq!(r.reduced, partition![1, 1]);
        assert_eq!(r.factor, Int::from(2));
        assert_eq!(r.z_shift, 1);
        let r = reduce_weight(&partition![1], 2, 3).unwrap();
        assert_eq!(r.reduced, partition![3, 1]);
        assert_eq!(r.factor, Int::from(1));
        assert_eq!(r.z_shift, -1);
        let r = reduce_weight(&Partition::empty(), 2, 3).unwrap();
        assert_eq!((r.reduced, r.z_shift), (partition![3, 3], -2));
    }

    #[test]
    fn reduced_matches_direct_on_a_sample() {
        let (k, n) = (2, 3);
        let a = alcove(k, n);
        for nu in [partition![4, 1], partition![5, 2], partition![6], partition![4, 4], Partition::empty()] {
            for mu in &a {
                for lam in &a {
                    assert_eq!(
                        n_reduced(mu, &nu, lam, k, n).unwrap(),
                        n_coefficient(mu, &nu, lam, k, n).unwrap(),
                        "{mu} {nu} {lam}"
                    );
                }
            }
        }
    }

    #[test]
    fn doubling_the_bound_changes_nothing() {
        let (k, n) = (2, 4);
        let a = alcove(k, n);
        for mu in &a {
            for nu in &a {
                for lam in &a {
                    let b = alpha_bound(mu, nu, n);
                    assert_eq!(
                        n_coefficient_with_bound(mu, nu, lam, k, n, b).unwrap(),
                        n_coefficient_with_bound(mu, nu, lam, k, n, 2 * b).unwrap()
                    );
                }
            }
        }
    }
}
