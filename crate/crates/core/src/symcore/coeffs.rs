//! Expansion coefficients of products in the monomial basis and of skew
//! complete symmetric functions.

use std::collections::HashSet;

use num_traits::{One, Zero};

use super::combinat::{binomial, distinct_rearrangements, l_matrix_count};
use super::partition::conjugate;
use crate::{Error, Int, IntTuple, MExpansion, Partition, Result};

/// `χ_{λ/μ} = ∏_{i≥1} C(λ'_i − μ'_{i+1}, μ'_i − μ'_{i+1})` for `μ ⊆ λ`, else 0.
pub fn chi_skew(lambda: &Partition, mu: &Partition) -> Int {
    if !lambda.contains(mu) {
        return Int::zero();
    }
    let lc = conjugate(lambda);
    let mc = conjugate(mu);
    let col = |p: &Partition, i: usize| p.part(i) as i64;
    (0..lc.len())
        .fold(Int::one(), |acc, i| acc * binomial(col(&lc, i) - col(&mc, i + 1), col(&mc, i) - col(&mc, i + 1)))
}

/// `#{w ∈ S^μ : μ∘w ≤ λ}`, by filtering the distinct rearrangements of `μ`.
pub fn chi_skew_by_count(lambda: &Partition, mu: &Partition, k: usize) -> Result<Int> {
    let top = IntTuple(lambda.padded(k)?);
    let rs = distinct_rearrangements(mu, k)?;
    Ok(Int::from(rs.iter().filter(|r| r.le_componentwise(&top)).count()))
}

/// `f^ν_{λμ} = #{(w, w') ∈ S^λ × S^μ : λ∘w + μ∘w' = ν}`, the coefficient of
/// `m_ν` in `m_λ m_μ`.
pub fn f_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition, k: usize) -> Result<Int> {
    for p in [lambda, mu, nu] {
        if p.len() > k {
            return Err(Error::TooManyParts { partition: p.clone(), k });
        }
    }
    if lambda.size() + mu.size() != nu.size() {
        return Ok(Int::zero());
    }
    let target = IntTuple(nu.padded(k)?);
    let mu_orbit: HashSet<IntTuple> = distinct_rearrangements(mu, k)?.into_iter().collect();
    let count = distinct_rearrangements(lambda, k)?.iter().filter(|a| mu_orbit.contains(&target.sub(a))).count();
    Ok(Int::from(count))
}

/// `h_λ = Σ_μ L_{λμ} m_μ` in `k` variables.
pub fn h_expansion(lambda: &Partition, k: usize) -> MExpansion<Int> {
    let size = lambda.size();
    MExpansion::from_terms(
        k,
        Partition::all_of_size(size, k, size.min(u32::MAX as u64) as u32).into_iter().map(|mu| {
            let c = l_matrix_count(lambda, &mu);
            (mu, c)
        }),
    )
}

/// `χ_{ν/μ}(λ) = Σ_α L_{λα} f^ν_{αμ}`: the coefficient of `m_λ` in `h_{ν/μ}`
/// computed through products of monomial functions.
pub fn chi_of_weight(nu: &Partition, mu: &Partition, lambda: &Partition) -> Int {
    if nu.size() != mu.size() + lambda.size() {
        return Int::zero();
    }
    let size = lambda.size();
    let mut total = Int::zero();
    for alpha in Partition::all_of_size(size, usize::MAX, size as u32) {
        let l = l_matrix_count(lambda, &alpha);
        if l.is_zero() {
            continue;
        }
        let k = nu.len().max(mu.len()).max(alpha.len()).max(1);
        total += l * f_coefficient(&alpha, mu, nu, k).expect("k covers every part count");
    }
    total
}
