use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::combinat::distinct_permutations;
use crate::{Coefficient, Error, Partition, Result};

/// A symmetric polynomial in `k` variables, `Σ_λ c_λ m_λ`.
///
/// Only partitions with at most `k` parts are stored (the others vanish in
/// `k` variables) and zero coefficients are never kept.
#[derive(Clone, Debug, PartialEq)]
pub struct MExpansion<C> {
    k: usize,
    coeffs: BTreeMap<Partition, C>,
}

impl<C: Coefficient> MExpansion<C> {
    pub fn zero(k: usize) -> Self {
        MExpansion { k, coeffs: BTreeMap::new() }
    }

    pub fn one(k: usize) -> Self {
        Self::monomial(Partition::empty(), k)
    }

    /// `m_λ`, or zero when `λ` has more than `k` parts.
    pub fn monomial(lambda: Partition, k: usize) -> Self {
        let mut e = Self::zero(k);
        e.add_term(lambda, C::one());
        e
    }

    pub fn from_terms(k: usize, terms: impl IntoIterator<Item = (Partition, C)>) -> Self {
        let mut e = Self::zero(k);
        for (p, c) in terms {
            e.add_term(p, c);
        }
        e
    }

    pub fn variables(&self) -> usize {
        self.k
    }

    /// Adds `c · m_λ`; terms with more than `k` parts are dropped.
    pub fn add_term(&mut self, lambda: Partition, c: C) {
        if lambda.len() > self.k || c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(lambda.clone()).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> C {
        self.coeffs.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True if every stored term has degree `deg`.
    pub fn is_homogeneous(&self, deg: u64) -> bool {
        self.coeffs.keys().all(|p| p.size() == deg)
    }

    pub fn scale(&self, s: &C) -> Self {
        Self::from_terms(self.k, self.coeffs.iter().map(|(p, c)| (p.clone(), c.clone() * s.clone())))
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> MExpansion<D> {
        MExpansion::from_terms(self.k, self.coeffs.iter().map(|(p, c)| (p.clone(), f(c))))
    }

    /// Expands into the raw monomial basis: exponent `k`-tuple ↦ coefficient.
    pub fn to_monomials(&self) -> BTreeMap<Vec<i64>, C> {
        let mut out: BTreeMap<Vec<i64>, C> = BTreeMap::new();
        for (p, c) in &self.coeffs {
            let exps = p.padded(self.k).expect("stored partitions fit in k");
            for r in distinct_permutations(&exps) {
                let slot = out.entry(r.0).or_insert_with(C::zero);
                *slot = slot.clone() + c.clone();
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Reads a symmetric polynomial back from its monomials. The coefficient
    /// of `m_ν` is the coefficient of `x^ν`; fails if the input is not
    /// symmetric.
    pub fn from_monomials(k: usize, monomials: &BTreeMap<Vec<i64>, C>) -> Result<Self>
    where
        C: PartialEq,
    {
        let mut out = Self::zero(k);
        for (e, c) in monomials {
            if e.windows(2).all(|w| w[0] >= w[1]) {
                out.add_term(Partition::from_i64(e)?, c.clone());
            }
        }
        let back = out.to_monomials();
        if &back != monomials {
            return Err(Error::NotSymmetric);
        }
        Ok(out)
    }

    fn check_k(&self, other: &Self) {
        assert_eq!(self.k, other.k, "MExpansion variable counts differ");
    }
}

impl<C: Coefficient> Add for &MExpansion<C> {
    type Output = MExpansion<C>;
    fn add(self, rhs: Self) -> MExpansion<C> {
        self.check_k(rhs);
        let mut out = self.clone();
        for (p, c) in &rhs.coeffs {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub for &MExpansion<C> {
    type Output = MExpansion<C>;
    fn sub(self, rhs: Self) -> MExpansion<C> {
        self.check_k(rhs);
        let mut out = self.clone();
        for (p, c) in &rhs.coeffs {
            out.add_term(p.clone(), C::zero() - c.clone());
        }
        out
    }
}

impl<C: Coefficient> Neg for &MExpansion<C> {
    type Output = MExpansion<C>;
    fn neg(self) -> MExpansion<C> {
        self.map_coeffs(|c| C::zero() - c.clone())
    }
}

/// Product by brute force over monomial orbits: every pair of exponent
/// vectors is added and the result read back in the `m` basis.
impl<C: Coefficient> Mul for &MExpansion<C> {
    type Output = MExpansion<C>;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> MExpansion<C> {
        self.check_k(rhs);
        let left = self.to_monomials();
        let right = rhs.to_monomials();
        let mut out = MExpansion::zero(self.k);
        for (a, ca) in &left {
            for (b, cb) in &right {
                let e: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                // only sorted exponents carry the m-coefficient
                if e.windows(2).all(|w| w[0] >= w[1]) {
                    let p = Partition::from_i64(&e).expect("nonnegative exponents");
                    out.add_term(p, ca.clone() * cb.clone());
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{partition, Int};

    fn m(p: Partition, k: usize) -> MExpansion<Int> {
        MExpansion::monomial(p, k)
    }

    #[test]
    fn m1_squared_in_two_variables() {
        let p = &m(partition![1], 2) * &m(partition![1], 2);
        assert_eq!(p.coeff(&partition![2]), Int::from(1));
        assert_eq!(p.coeff(&partition![1, 1]), Int::from(2));
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn too_many_parts_vanish() {
        assert!(m(partition![1, 1, 1], 2).is_zero());
        let p = &m(partition![1, 1], 2) * &m(partition![1], 2);
        assert_eq!(p.coeff(&partition![2, 1]), Int::from(1));
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn monomial_round_trip() {
        let e = MExpansion::from_terms(3, [(partition![2, 1], Int::from(3)), (partition![1, 1, 1], Int::from(-1))]);
        let mons = e.to_monomials();
        assert_eq!(mons.len(), 7);
        assert_eq!(MExpansion::from_monomials(3, &mons).unwrap(), e);
        let mut asym = mons.clone();
        asym.insert(vec![0, 0, 5], Int::from(1));
        assert!(MExpansion::from_monomials(3, &asym).is_err());
    }

    #[test]
    fn arithmetic_cancels() {
        let a = MExpansion::from_terms(2, [(partition![2], Int::from(3))]);
        let z = &a - &a;
        assert!(z.is_zero());
        assert_eq!(&a + &(-&a), z);
    }
}
