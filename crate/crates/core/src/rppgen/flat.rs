use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::symcore::chi_skew;
use crate::{Int, IntTuple, MExpansion, Partition};

/// A reverse plane partition of shape `λ/μ` written as a chain
/// `μ = λ^(0) ⊆ λ^(1) ⊆ … ⊆ λ^(l) = λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct RppChain {
    steps: Vec<Partition>,
}

impl RppChain {
    pub fn steps(&self) -> &[Partition] {
        &self.steps
    }

    pub fn base(&self) -> &Partition {
        &self.steps[0]
    }

    pub fn top(&self) -> &Partition {
        self.steps.last().expect("chain has a base")
    }

    /// `θ_i = |λ^(i)/λ^(i−1)|`.
    pub fn weight(&self) -> IntTuple {
        IntTuple(self.steps.windows(2).map(|w| w[1].size() as i64 - w[0].size() as i64).collect())
    }
}

/// All chains from `μ` to `λ` whose step sizes are exactly `θ`; a zero
/// entry repeats the partition.
pub fn enumerate_rpp(lambda: &Partition, mu: &Partition, theta: &[i64]) -> Vec<RppChain> {
    let total: i64 = theta.iter().sum();
    if !lambda.contains(mu) || theta.iter().any(|&t| t < 0) || total != lambda.size() as i64 - mu.size() as i64 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = vec![mu.clone()];
    extend(lambda, theta, &mut cur, &mut out);
    out
}

fn extend(lambda: &Partition, theta: &[i64], cur: &mut Vec<Partition>, out: &mut Vec<RppChain>) {
    let Some((&t, rest)) = theta.split_first() else {
        out.push(RppChain { steps: cur.clone() });
        return;
    };
    let last = cur.last().expect("nonempty").clone();
    for next in Partition::between(&last, lambda, last.size() + t as u64) {
        cur.push(next);
        extend(lambda, rest, cur, out);
        cur.pop();
    }
}

/// `χ_π = ∏_i χ_{λ^(i)/λ^(i−1)}`.
pub fn rpp_weight_factor(chain: &RppChain) -> Int {
    chain.steps.windows(2).fold(Int::one(), |acc, w| acc * chi_skew(&w[1], &w[0]))
}

/// `Σ_π χ_π` over chains of shape `λ/μ` and weight `θ`, by dynamic
/// programming over the intermediate partitions.
pub fn rpp_weighted_count(lambda: &Partition, mu: &Partition, theta: &[u64]) -> Int {
    if !lambda.contains(mu) || theta.iter().sum::<u64>() + mu.size() != lambda.size() {
        return Int::zero();
    }
    let mut layer: BTreeMap<Partition, Int> = BTreeMap::from([(mu.clone(), Int::one())]);
    for &t in theta {
        let mut next: BTreeMap<Partition, Int> = BTreeMap::new();
        for (p, w) in &layer {
            for q in Partition::between(p, lambda, p.size() + t) {
                let c = chi_skew(&q, p);
                if !c.is_zero() {
                    *next.entry(q).or_insert_with(Int::zero) += w * c;
                }
            }
        }
        layer = next;
    }
    layer.remove(lambda).unwrap_or_else(Int::zero)
}

/// `h_{λ/μ} = Σ_π χ_π x^π` in `k` variables, reading the coefficient of
/// `m_ν` off chains of weight exactly `ν`. Zero unless `μ ⊆ λ`.
pub fn h_skew_expansion(lambda: &Partition, mu: &Partition, k: usize) -> MExpansion<Int> {
    if !lambda.contains(mu) {
        return MExpansion::zero(k);
    }
    let deg = lambda.size() - mu.size();
    MExpansion::from_terms(
        k,
        Partition::all_of_size(deg, k, deg as u32).into_iter().map(|nu| {
            let theta: Vec<u64> = nu.parts().iter().map(|&p| p as u64).collect();
            let c = rpp_weighted_count(lambda, mu, &theta);
            (nu, c)
        }),
    )
}
