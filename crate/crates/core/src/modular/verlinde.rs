//! Fusion coefficients from the S-matrix.

use num_complex::Complex;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::data::{s_entry, stabilizer};
use crate::affine::alcove;
use crate::symcore::factorial;
use crate::{Error, Partition, Result};

/// How `𝒮^{−1}_{να}` is read in the residue formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerlindeReading {
    /// Entry of the inverse matrix, `(𝒮^{−1})_{αν} = conj(𝒮_{να})`, with
    /// prefactor `√(|S_∅||S_ν|/(|S_λ||S_μ|))`.
    InverseMatrix,
    /// Reciprocal `1/𝒮_{να}` of the entry, prefactor `√(|S_ν|/(|S_λ||S_μ|))`.
    EntrywiseReciprocal,
}

/// Magnitude below which an S entry counts as zero.
pub const SMALL_ENTRY: f64 = 1e-12;

/// Largest accepted distance to the nearest integer.
pub const INTEGRALITY_TOL: f64 = 1e-6;

/// Precomputed S-matrix data at one level.
pub struct Verlinde {
    k: usize,
    n: usize,
    basis: Vec<Partition>,
    s: Vec<Vec<Complex<f64>>>,
    s_empty: Vec<Complex<f64>>,
    stab: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerlindeValue {
    pub re: f64,
    pub im: f64,
    pub rounded: i64,
    pub deviation: f64,
}

impl Verlinde {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        let basis = alcove(k, n);
        let mut s = Vec::with_capacity(basis.len());
        for l in &basis {
            s.push(basis.iter().map(|a| s_entry::<f64>(l, a, k, n)).collect::<Result<Vec<_>>>()?);
        }
        let empty = Partition::empty();
        let s_empty = basis.iter().map(|a| s_entry::<f64>(&empty, a, k, n)).collect::<Result<Vec<_>>>()?;
        let stab = basis.iter().map(|l| stabilizer(l, k)).collect::<Result<Vec<_>>>()?;
        Ok(Verlinde { k, n, basis, s, s_empty, stab })
    }

    pub fn basis(&self) -> &[Partition] {
        &self.basis
    }

    fn index(&self, p: &Partition) -> Result<usize> {
        self.basis.iter().position(|q| q == p).ok_or_else(|| Error::NotInAlcove {
            partition: p.clone(),
            k: self.k,
            n: self.n,
        })
    }

    /// The residue sum for `N_{λμ}^ν` without any integrality check.
    pub fn value(
        &self,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
        reading: VerlindeReading,
    ) -> Result<Complex<f64>> {
        let (l, m, v) = (self.index(lambda)?, self.index(mu)?, self.index(nu)?);
        let mut total = Complex::new(0.0, 0.0);
        for a in 0..self.basis.len() {
            let inv = match reading {
                VerlindeReading::InverseMatrix => self.s[v][a].conj(),
                VerlindeReading::EntrywiseReciprocal => {
                    let e = self.s[v][a];
                    if e.norm() < SMALL_ENTRY {
                        return Err(Error::SmallSEntry {
                            nu: nu.clone(),
                            alpha: self.basis[a].clone(),
                            magnitude: e.norm(),
                        });
                    }
                    e.inv()
                }
            };
            total += self.s[l][a] * self.s[m][a] * inv / self.s_empty[a];
        }
        let mut pre = self.stab[v] / (self.stab[l] * self.stab[m]);
        if reading == VerlindeReading::InverseMatrix {
            pre *= factorial(self.k as u64).to_f64().expect("finite");
        }
        Ok(total * pre.sqrt())
    }

    /// The residue sum and its nearest integer; fails if the distance exceeds
    /// [`INTEGRALITY_TOL`].
    pub fn n(
        &self,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
        reading: VerlindeReading,
    ) -> Result<VerlindeValue> {
        let z = self.value(lambda, mu, nu, reading)?;
        let rounded = z.re.round();
        let deviation = (z - Complex::new(rounded, 0.0)).norm();
        if deviation.is_nan() || deviation > INTEGRALITY_TOL {
            return Err(Error::NotIntegral {
                lambda: lambda.clone(),
                mu: mu.clone(),
                nu: nu.clone(),
                value: format!("{}{:+}i", z.re, z.im),
                tol: INTEGRALITY_TOL,
            });
        }
        Ok(VerlindeValue { re: z.re, im: z.im, rounded: rounded as i64, deviation })
    }
}

/// `N_{λμ}^ν` from the residue formula.
pub fn verlinde_n(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    k: usize,
    n: usize,
    reading: VerlindeReading,
) -> Result<VerlindeValue> {
    Verlinde::new(k, n)?.n(lambda, mu, nu, reading)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::n_coefficient;
    use crate::{partition, Int};

    #[test]
    fn level_one_cyclic_rule() {
        let v = Verlinde::new(1, 4).unwrap();
        for a in 1..=4u32 {
            for b in 1..=4u32 {
                for c in 1..=4u32 {
                    let r =
                        v.n(&partition![a], &partition![b], &partition![c], VerlindeReading::InverseMatrix).unwrap();
                    assert_eq!(r.rounded, ((a + b) % 4 == c % 4) as i64);
                    assert!(r.im.abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn entrywise_reading_is_off_by_n_at_level_one() {
        let v = Verlinde::new(1, 4).unwrap();
        let z = v.value(&partition![1], &partition![2], &partition![3], VerlindeReading::EntrywiseReciprocal).unwrap();
        assert!((z.re - 4.0).abs() < 1e-9);
    }

    #[test]
    fn matches_combinatorial_coefficients() {
        let (k, n) = (2, 3);
        let v = Verlinde::new(k, n).unwrap();
        for l in v.basis() {
            for m in v.basis() {
                for nu in v.basis() {
                    let r = v.n(l, m, nu, VerlindeReading::InverseMatrix).unwrap();
                    assert_eq!(Int::from(r.rounded), n_coefficient(l, m, nu, k, n).unwrap());
                }
            }
        }
        assert!(
            verlinde_n(&partition![4], &partition![1], &partition![1], 1, 3, VerlindeReading::InverseMatrix).is_err()
        );
    }
}
