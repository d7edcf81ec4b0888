//! Root-of-unity evaluation and the S, T, C matrices over the alcove.

use num_complex::Complex;
use num_rational::Ratio;
use num_traits::ToPrimitive;

use super::matrix::ComplexMatrix;
use super::phase::RationalPhase;
use crate::affine::{alcove, AffinePermutation, LoopFunction};
use crate::symcore::{distinct_permutations, stabilizer_order};
use crate::{Error, Partition, Real, Result};

/// `m_λ(ζ^{e_1}, …, ζ^{e_k})` with `ζ = e^{2πi/n}`, summed over the orbit.
pub fn eval_m_at<T: Real>(lambda: &Partition, exponents: &[i64], n: usize) -> Result<Complex<T>> {
    let k = exponents.len();
    let padded = lambda.padded(k)?;
    let mut total = Complex::new(T::zero(), T::zero());
    for r in distinct_permutations(&padded) {
        let e: i64 = r.iter().zip(exponents).map(|(a, b)| a * b).sum();
        total = total + RationalPhase::new(e, n as i64).to_complex::<T>();
    }
    Ok(total)
}

/// `m_λ(ζ^α)` for an alcove point `α`.
pub fn eval_m<T: Real>(lambda: &Partition, alpha: &Partition, k: usize, n: usize) -> Result<Complex<T>> {
    LoopFunction::from_alcove(alpha, k, n)?;
    eval_m_at(lambda, &alpha.padded(k)?, n)
}

/// `|S_λ|` for `λ` padded with zeros to `k` entries.
pub fn stabilizer(lambda: &Partition, k: usize) -> Result<f64> {
    Ok(stabilizer_order(&lambda.padded(k)?).to_f64().expect("finite"))
}

fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("float conversion")
}

/// `𝒮_{λα} = √(|S_λ|/|S_α|) m_λ(ζ^α) / n^{k/2}`; `λ` may be any partition
/// with at most `k` parts (`λ = ∅` gives the denominator row).
pub fn s_entry<T: Real>(lambda: &Partition, alpha: &Partition, k: usize, n: usize) -> Result<Complex<T>> {
    let scale = (stabilizer(lambda, k)? / stabilizer(alpha, k)?).sqrt() / (n as f64).powf(k as f64 / 2.0);
    Ok(eval_m::<T>(lambda, alpha, k, n)? * real::<T>(scale))
}

pub fn s_matrix<T: Real>(k: usize, n: usize) -> Result<ComplexMatrix<T>> {
    let basis = alcove(k, n);
    let mut m = ComplexMatrix::zeros(basis.len());
    for (i, l) in basis.iter().enumerate() {
        for (j, a) in basis.iter().enumerate() {
            m[(i, j)] = s_entry(l, a, k, n)?;
        }
    }
    Ok(m)
}

/// `ζ^{−kn(n−1)/24} ∏_i ζ^{λ_i(n−λ_i)/2}` as an exact phase.
pub fn t_phase(lambda: &Partition, k: usize, n: usize) -> RationalPhase {
    let n64 = n as i64;
    let central = Ratio::new(-(k as i64) * n64 * (n64 - 1), 24);
    let weight: i64 = lambda.parts().iter().map(|&l| l as i64 * (n64 - l as i64)).sum();
    RationalPhase::root_power(central + Ratio::new(weight, 2), n)
}

pub fn t_matrix<T: Real>(k: usize, n: usize) -> ComplexMatrix<T> {
    let basis = alcove(k, n);
    let mut m = ComplexMatrix::zeros(basis.len());
    for (i, l) in basis.iter().enumerate() {
        m[(i, i)] = t_phase(l, k, n).to_complex();
    }
    m
}

/// `λ*`: the loop with window `(n−λ_k, …, n−λ_1)` composed with `τ^{m_n(λ)}`.
pub fn dual_weight(lambda: &Partition, k: usize, n: usize) -> Result<Partition> {
    LoopFunction::from_alcove(lambda, k, n)?;
    let padded = lambda.padded(k)?;
    let window: Vec<i64> = padded.iter().rev().map(|&l| n as i64 - l).collect();
    let m = lambda.multiplicity(n as u32, k) as i64;
    let shifted = LoopFunction::new(n, window)?.act(&AffinePermutation::tau(k).pow(m))?;
    shifted.to_partition()
}

/// Permutation matrix `𝒞_{λμ} = δ_{λ,μ*}`.
pub fn c_matrix<T: Real>(k: usize, n: usize) -> Result<ComplexMatrix<T>> {
    let basis = alcove(k, n);
    let mut m = ComplexMatrix::zeros(basis.len());
    for (j, mu) in basis.iter().enumerate() {
        let dual = dual_weight(mu, k, n)?;
        let i = basis.iter().position(|p| *p == dual).ok_or_else(|| Error::NotInAlcove {
            partition: dual.clone(),
            k,
            n,
        })?;
        m[(i, j)] = Complex::new(T::one(), T::zero());
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::symcore::distinct_rearrangements;

    #[test]
    fn level_one_evaluations() {
        for n in 2..6usize {
            for a in 1..=n as u32 {
                for b in 1..=n as u32 {
                    let v: Complex<f64> = eval_m(&partition![a], &partition![b], 1, n).unwrap();
                    let expected: Complex<f64> = RationalPhase::new((a * b) as i64, n as i64).to_complex();
                    assert!((v - expected).norm() < 1e-12);
                }
            }
        }
        let one: Complex<f64> = eval_m(&Partition::empty(), &partition![2, 1], 2, 3).unwrap();
        assert!((one - Complex::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn evaluation_is_bounded_by_orbit_size() {
        let (k, n) = (3, 3);
        for l in alcove(k, n) {
            let orbit = distinct_rearrangements(&l, k).unwrap().len() as f64;
            for a in alcove(k, n) {
                assert!(eval_m::<f64>(&l, &a, k, n).unwrap().norm() <= orbit + 1e-12);
            }
        }
    }

    #[test]
    fn level_one_s_is_a_dft() {
        let n = 5;
        let s = s_matrix::<f64>(1, n).unwrap();
        let basis = alcove(1, n);
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let z: Complex<f64> = RationalPhase::new((a.part(0) * b.part(0)) as i64, n as i64).to_complex();
                assert!((s[(i, j)] - z / (n as f64).sqrt()).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn duals() {
        assert_eq!(dual_weight(&partition![3, 1], 2, 3).unwrap(), partition![3, 2]);
        assert_eq!(dual_weight(&partition![2, 1], 2, 3).unwrap(), partition![2, 1]);
        assert_eq!(dual_weight(&partition![3, 2, 1], 3, 4).unwrap(), partition![3, 2, 1]);
        for (k, n) in [(1, 5), (2, 3), (2, 4), (3, 3), (3, 4)] {
            for l in alcove(k, n) {
                let d = dual_weight(&l, k, n).unwrap();
                assert_eq!(dual_weight(&d, k, n).unwrap(), l);
                assert_eq!(t_phase(&d, k, n), t_phase(&l, k, n));
            }
        }
    }

    #[test]
    fn c_is_a_permutation() {
        let c = c_matrix::<f64>(3, 3).unwrap();
        for i in 0..c.size() {
            let ones = (0..c.size()).filter(|&j| c[(i, j)].re == 1.0).count();
            let zeros = (0..c.size()).filter(|&j| c[(i, j)].norm() == 0.0).count();
            assert_eq!((ones, zeros), (1, c.size() - 1));
        }
    }

    #[test]
    fn top_row_has_unit_monomial() {
        let (k, n) = (2, 4);
        let top = partition![4, 4];
        for a in alcove(k, n) {
            assert!((eval_m::<f64>(&top, &a, k, n).unwrap().norm() - 1.0).abs() < 1e-12);
        }
    }
}
