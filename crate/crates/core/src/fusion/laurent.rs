use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::{Coefficient, Int, Rational};

/// A Laurent polynomial `Σ c_e z^e` in one variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent<C> {
    terms: BTreeMap<i64, C>,
}

impl<C: Coefficient> Laurent<C> {
    pub fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    /// `c z^e`.
    pub fn monomial(e: i64, c: C) -> Self {
        let mut l = Self::zero();
        l.add_term(e, c);
        l
    }

    pub fn z_power(e: i64) -> Self {
        Self::monomial(e, C::one())
    }

    pub fn add_term(&mut self, e: i64, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn coeff(&self, e: i64) -> C {
        self.terms.get(&e).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplies by `z^e`.
    pub fn shift(&self, e: i64) -> Self {
        Laurent { terms: self.terms.iter().map(|(x, c)| (x + e, c.clone())).collect() }
    }

    pub fn scale(&self, s: &C) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, c.clone() * s.clone());
        }
        out
    }
}

impl Laurent<Int> {
    /// Specialises `z ↦ z0`; `z0` must be nonzero when negative powers occur.
    pub fn eval(&self, z0: &Rational) -> Rational {
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 { pow(z0, *e as u64) } else { pow(&z0.recip(), e.unsigned_abs()) };
            total += Rational::from_integer(c.clone()) * p;
        }
        total
    }
}

fn pow(base: &Rational, e: u64) -> Rational {
    (0..e).fold(Rational::one(), |acc, _| acc * base)
}

impl<C: Coefficient> Add for &Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: Self) -> Laurent<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: Self) -> Laurent<C> {
        self + &(-rhs)
    }
}

impl<C: Coefficient> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e, C::zero() - c.clone())).collect() }
    }
}

impl<C: Coefficient> Mul for &Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Self) -> Laurent<C> {
        let mut out = Laurent::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a + b, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| match *e {
                0 => format!("{c}"),
                1 => format!("{c}·z"),
                _ => format!("{c}·z^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(terms: &[(i64, i64)]) -> Laurent<Int> {
        let mut out = Laurent::zero();
        for &(e, c) in terms {
            out.add_term(e, Int::from(c));
        }
        out
    }

    #[test]
    fn arithmetic() {
        let a = l(&[(-1, 1), (1, 2)]);
        let b = l(&[(1, 1)]);
        assert_eq!(&a * &b, l(&[(0, 1), (2, 2)]));
        assert!((&a - &a).is_zero());
        assert_eq!((&a + &b).coeff(1), Int::from(3));
        assert_eq!(a.shift(2), l(&[(1, 1), (3, 2)]));
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut a = l(&[(3, 2)]);
        a.add_term(3, Int::from(-2));
        assert!(a.is_zero());
        assert_eq!(a.len(), 0);
    }

    #[test]
    fn evaluation() {
        let a = l(&[(-1, 1), (2, 3)]);
        let half = Rational::new(Int::from(1), Int::from(2));
        assert_eq!(a.eval(&half), Rational::new(Int::from(11), Int::from(4)));
        assert_eq!(a.to_string(), "1·z^-1 + 3·z^2");
    }
}
