//! The algebra 𝒱_k(n): the monomial basis over the alcove with Laurent
//! coefficients in `z`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{ToPrimitive, Zero};

use super::coeff::{alpha_bound, count_pairs, degree_shift, reduce_weight, translated_windows};
use super::laurent::Laurent;
use crate::affine::{alcove, LoopFunction};
use crate::linalg::determinant;
use crate::rppgen::CylindricRpp;
use crate::symcore::h_expansion;
use crate::{Coefficient, Error, Int, Partition, Rational, Result};

/// An element `Σ_λ c_λ(z) m_λ` of 𝒱_k(n), keys in the alcove.
#[derive(Clone, Debug, PartialEq)]
pub struct FusionElement<C> {
    k: usize,
    n: usize,
    terms: BTreeMap<Partition, Laurent<C>>,
}

impl<C: Coefficient> FusionElement<C> {
    pub fn zero(k: usize, n: usize) -> Self {
        FusionElement { k, n, terms: BTreeMap::new() }
    }

    /// `m_λ` for `λ` in the alcove.
    pub fn basis(lambda: &Partition, k: usize, n: usize) -> Result<Self> {
        Self::from_terms(k, n, [(lambda.clone(), Laurent::one())])
    }

    pub fn from_terms(k: usize, n: usize, terms: impl IntoIterator<Item = (Partition, Laurent<C>)>) -> Result<Self> {
        let mut out = Self::zero(k, n);
        for (p, c) in terms {
            LoopFunction::from_alcove(&p, k, n)?;
            out.add_term(p, &c);
        }
        Ok(out)
    }

    fn add_term(&mut self, p: Partition, c: &Laurent<C>) {
        let slot = self.terms.entry(p.clone()).or_insert_with(Laurent::zero);
        *slot = &*slot + c;
        if slot.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, lambda: &Partition) -> Laurent<C> {
        self.terms.get(lambda).cloned().unwrap_or_else(Laurent::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Laurent<C>)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &Laurent<C>) -> Self {
        let mut out = Self::zero(self.k, self.n);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), &(c * s));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_level(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c);
        }
        Ok(out)
    }

    fn check_level(&self, other: &Self) -> Result<()> {
        if self.k != other.k || self.n != other.n {
            return Err(Error::LevelMismatch { k1: self.k, n1: self.n, k2: other.k, n2: other.n });
        }
        Ok(())
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for FusionElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(p, c)| format!("({c})·m{p}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// One structure constant `m_λ m_μ ∋ z^d N m_ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstant {
    pub nu: usize,
    pub d: u64,
    pub value: Int,
}

/// 𝒱_k(n) with its structure constants precomputed over the alcove.
pub struct FusionAlgebra {
    k: usize,
    n: usize,
    basis: Vec<Partition>,
    index: HashMap<Partition, usize>,
    table: Vec<Vec<Vec<StructureConstant>>>,
}

impl FusionAlgebra {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::NonPositive { name: "k" });
        }
        if n == 0 {
            return Err(Error::NonPositive { name: "n" });
        }
        let basis = alcove(k, n);
        let index = basis.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let size = basis.len();
        let mut table = vec![vec![Vec::new(); size]; size];
        // targets λ∘y^α depend only on (λ, d); share them across (μ, ν)
        let max_d = (2 * n * k) / n;
        let bound = alpha_bound(&basis[0], &basis[0], n);
        let mut targets = HashMap::new();
        for (t, lam) in basis.iter().enumerate() {
            let l = LoopFunction::from_alcove(lam, k, n)?;
            for d in 0..=max_d as i64 {
                targets.insert((t, d), translated_windows(&l, d, bound)?);
            }
        }
        for i in 0..size {
            for j in 0..size {
                for (t, lam) in basis.iter().enumerate() {
                    let Some(d) = degree_shift(&basis[i], &basis[j], lam, n) else { continue };
                    let v = count_pairs(&basis[i], &basis[j], k, &targets[&(t, d as i64)])?;
                    if !v.is_zero() {
                        table[i][j].push(StructureConstant { nu: t, d, value: v });
                    }
                }
            }
        }
        Ok(FusionAlgebra { k, n, basis, index, table })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The alcove in lexicographically decreasing order.
    pub fn basis(&self) -> &[Partition] {
        &self.basis
    }

    pub fn index_of(&self, p: &Partition) -> Result<usize> {
        self.index.get(p).copied().ok_or_else(|| Error::NotInAlcove { partition: p.clone(), k: self.k, n: self.n })
    }

    /// Nonzero `(ν, d, N_{λμ}^ν)` for the basis pair `(λ, μ)`.
    pub fn structure_constants(&self, lambda: &Partition, mu: &Partition) -> Result<Vec<(Partition, u64, Int)>> {
        let (i, j) = (self.index_of(lambda)?, self.index_of(mu)?);
        Ok(self.table[i][j].iter().map(|s| (self.basis[s.nu].clone(), s.d, s.value.clone())).collect())
    }

    /// `N_{λμ}^ν` from the table.
    pub fn coefficient(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Int> {
        let (i, j, t) = (self.index_of(lambda)?, self.index_of(mu)?, self.index_of(nu)?);
        Ok(self.table[i][j].iter().find(|s| s.nu == t).map(|s| s.value.clone()).unwrap_or_else(Int::zero))
    }

    pub fn basis_element<C: Coefficient>(&self, lambda: &Partition) -> Result<FusionElement<C>> {
        FusionElement::basis(lambda, self.k, self.n)
    }

    /// `z^{−k} m_{(n^k)}`.
    pub fn unit<C: Coefficient>(&self) -> FusionElement<C> {
        let top = Partition::new(vec![self.n as u32; self.k]).expect("decreasing");
        let mut out = FusionElement::zero(self.k, self.n);
        out.add_term(top, &Laurent::z_power(-(self.k as i64)));
        out
    }

    fn check<C>(&self, a: &FusionElement<C>) -> Result<()> {
        if a.k != self.k || a.n != self.n {
            return Err(Error::LevelMismatch { k1: self.k, n1: self.n, k2: a.k, n2: a.n });
        }
        Ok(())
    }

    /// Bilinear extension of `m_λ m_μ = Σ_ν z^{(|λ|+|μ|−|ν|)/n} N_{λμ}^ν m_ν`.
    pub fn product<C: Coefficient>(&self, a: &FusionElement<C>, b: &FusionElement<C>) -> Result<FusionElement<C>> {
        self.check(a)?;
        self.check(b)?;
        let mut out = FusionElement::zero(self.k, self.n);
        for (p, cp) in &a.terms {
            let i = self.index_of(p)?;
            for (q, cq) in &b.terms {
                let j = self.index_of(q)?;
                let c = cp * cq;
                for s in &self.table[i][j] {
                    let term = c.shift(s.d as i64).scale(&lift(&s.value));
                    out.add_term(self.basis[s.nu].clone(), &term);
                }
            }
        }
        Ok(out)
    }

    /// `ε(a)` as a numerator Laurent polynomial over the exact denominator
    /// `n^k`: `ε(m_λ) = z^k δ_{λ,(n^k)} / n^k`.
    pub fn epsilon<C: Coefficient>(&self, a: &FusionElement<C>) -> Result<(Laurent<C>, Int)> {
        self.check(a)?;
        let top = Partition::new(vec![self.n as u32; self.k]).expect("decreasing");
        Ok((a.coeff(&top).shift(self.k as i64), Int::from(self.n).pow(self.k as u32)))
    }

    /// `[ε(m_λ m_μ)]` at `z = z0`, indexed by the alcove.
    pub fn gram_matrix(&self, z0: &Rational) -> Result<Vec<Vec<Rational>>> {
        if z0.is_zero() {
            return Err(Error::ZeroSpecialisation);
        }
        let mut g = Vec::with_capacity(self.basis.len());
        for p in &self.basis {
            let mut row = Vec::with_capacity(self.basis.len());
            for q in &self.basis {
                let prod = self.product::<Int>(&self.basis_element(p)?, &self.basis_element(q)?)?;
                let (num, den) = self.epsilon(&prod)?;
                row.push(num.eval(z0) / Rational::from_integer(den));
            }
            g.push(row);
        }
        Ok(g)
    }

    /// Exact determinant of [`gram_matrix`](Self::gram_matrix).
    pub fn gram_determinant(&self, z0: &Rational) -> Result<Rational> {
        Ok(determinant(self.gram_matrix(z0)?))
    }

    /// `h_λ · m_μ` computed by expanding `h_λ` in monomials, reducing each
    /// `m_α` to `z^e c m_α̌` and multiplying in the algebra.
    pub fn h_action(&self, lambda: &Partition, mu: &Partition) -> Result<FusionElement<Int>> {
        let m_mu = self.basis_element::<Int>(mu)?;
        let mut out = FusionElement::zero(self.k, self.n);
        for (alpha, l) in h_expansion(lambda, self.k).iter() {
            let r = reduce_weight(alpha, self.k, self.n)?;
            let coeff = Laurent::monomial(r.z_shift, l * &r.factor);
            let term = self.product(&self.basis_element(&r.reduced)?, &m_mu)?.scale(&coeff);
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// `Σ_ν z^d χ_{ν/d/μ}(λ) m_ν` with `d = (|λ| + |μ| − |ν|)/n`, from
    /// cylindric plane partitions of weight `λ`.
    pub fn h_action_by_cylindric(
        &self,
        rpp: &CylindricRpp,
        lambda: &Partition,
        mu: &Partition,
    ) -> Result<FusionElement<Int>> {
        self.index_of(mu)?;
        let theta: Vec<u64> = lambda.parts().iter().map(|&p| p as u64).collect();
        let mut out = FusionElement::zero(self.k, self.n);
        for nu in &self.basis {
            let Some(d) = degree_shift(lambda, mu, nu, self.n) else { continue };
            let c = rpp.weighted_count(nu, d, mu, &theta)?;
            out.add_term(nu.clone(), &Laurent::monomial(d as i64, c));
        }
        Ok(out)
    }

    /// Compares [`h_action`](Self::h_action) with the cylindric expansion.
    pub fn h_action_check(&self, rpp: &CylindricRpp, lambda: &Partition, mu: &Partition) -> Result<bool> {
        Ok(self.h_action(lambda, mu)? == self.h_action_by_cylindric(rpp, lambda, mu)?)
    }
}

fn lift<C: Coefficient>(x: &Int) -> C {
    C::from_i64(x.to_i64().expect("structure constant fits in i64")).expect("coefficient ring contains the integers")
}

/// `a · b` in 𝒱_k(n), building the structure constants on the fly.
pub fn fusion_product<C: Coefficient>(a: &FusionElement<C>, b: &FusionElement<C>) -> Result<FusionElement<C>> {
    if a.k != b.k || a.n != b.n {
        return Err(Error::LevelMismatch { k1: a.k, n1: a.n, k2: b.k, n2: b.n });
    }
    FusionAlgebra::new(a.k, a.n)?.product(a, b)
}

/// `ε(a)` as `(numerator, n^k)`.
pub fn epsilon<C: Coefficient>(a: &FusionElement<C>) -> (Laurent<C>, Int) {
    let top = Partition::new(vec![a.n as u32; a.k]).expect("decreasing");
    (a.coeff(&top).shift(a.k as i64), Int::from(a.n).pow(a.k as u32))
}

/// Gram matrix of `ε` at `z = z0`.
pub fn gram_matrix(k: usize, n: usize, z0: &Rational) -> Result<Vec<Vec<Rational>>> {
    FusionAlgebra::new(k, n)?.gram_matrix(z0)
}

/// `h_λ m_μ` in 𝒱_k(n) against the cylindric expansion.
pub fn h_action_check(lambda: &Partition, mu: &Partition, k: usize, n: usize) -> Result<bool> {
    FusionAlgebra::new(k, n)?.h_action_check(&CylindricRpp::new(k, n)?, lambda, mu)
}
