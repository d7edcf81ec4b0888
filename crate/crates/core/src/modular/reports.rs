//! Numeric verdicts: idempotents and the modular relations.

use num_complex::Complex;
use serde::Serialize;

use super::data::{c_matrix, dual_weight, eval_m_at, s_matrix, stabilizer, t_matrix, t_phase};
use super::matrix::ComplexMatrix;
use crate::affine::alcove;
use crate::{MExpansion, Partition, Real, Result};

/// One checked identity.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationReport {
    pub relation: String,
    pub max_dev: f64,
    pub tol: f64,
    pub pass: bool,
}

impl RelationReport {
    pub fn new(relation: impl Into<String>, max_dev: f64, tol: f64) -> Self {
        RelationReport { relation: relation.into(), max_dev, tol, pass: max_dev < tol }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ModularReport {
    pub k: usize,
    pub n: usize,
    pub relations: Vec<RelationReport>,
}

impl ModularReport {
    pub fn pass(&self) -> bool {
        self.relations.iter().all(|r| r.pass)
    }

    pub fn max_dev(&self) -> f64 {
        self.relations.iter().map(|r| r.max_dev).fold(0.0, f64::max)
    }
}

fn dev<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> f64 {
    a.max_deviation(b).to_f64().unwrap_or(f64::INFINITY)
}

/// `(𝒮𝒯)³ = 𝒮² = 𝒞`, `𝒞² = Id`, `𝒮𝒮* = Id`, `𝒮* = 𝒞𝒮 = 𝒮𝒞`, `𝒞𝒯𝒞 = 𝒯` and
/// `θ_{λ*} = θ_λ`, each as a max-entry deviation.
pub fn modular_relations_report<T: Real>(k: usize, n: usize, tol: f64) -> Result<ModularReport> {
    let s = s_matrix::<T>(k, n)?;
    let t = t_matrix::<T>(k, n);
    let c = c_matrix::<T>(k, n)?;
    let id = ComplexMatrix::identity(s.size());
    let st = &s * &t;
    let st3 = &(&st * &st) * &st;
    let s2 = &s * &s;
    let s_star = s.adjoint();
    let mut theta_dev: f64 = 0.0;
    for l in alcove(k, n) {
        let (a, b) = (t_phase(&l, k, n), t_phase(&dual_weight(&l, k, n)?, k, n));
        let d: Complex<f64> = a.to_complex::<f64>() - b.to_complex::<f64>();
        theta_dev = theta_dev.max(d.norm());
    }
    let relations = vec![
        RelationReport::new("(ST)^3=S^2", dev(&st3, &s2), tol),
        RelationReport::new("S^2=C", dev(&s2, &c), tol),
        RelationReport::new("C^2=Id", dev(&(&c * &c), &id), tol),
        RelationReport::new("SS*=Id", dev(&(&s * &s_star), &id), tol),
        RelationReport::new("S*=CS", dev(&s_star, &(&c * &s)), tol),
        RelationReport::new("S*=SC", dev(&s_star, &(&s * &c)), tol),
        RelationReport::new("CTC=T", dev(&(&(&c * &t) * &c), &t), tol),
        RelationReport::new("theta(dual)=theta", theta_dev, tol),
    ];
    Ok(ModularReport { k, n, relations })
}

/// `𝔢_α = Σ_λ (|S_λ|/|S_α|) m_λ(ζ^{−α}) m_λ / n^k` in `k` variables.
pub fn idempotent<T: Real>(alpha: &Partition, k: usize, n: usize) -> Result<MExpansion<Complex<T>>> {
    let neg: Vec<i64> = alpha.padded(k)?.iter().map(|a| -a).collect();
    let norm = (n as f64).powi(k as i32);
    let mut out = MExpansion::zero(k);
    for l in alcove(k, n) {
        let w = stabilizer(&l, k)? / stabilizer(alpha, k)? / norm;
        let c = eval_m_at::<T>(&l, &neg, n)? * T::from_f64(w).expect("float conversion");
        out.add_term(l, c);
    }
    Ok(out)
}

/// Evaluates a complex symmetric polynomial at `(ζ^{e_1}, …, ζ^{e_k})`.
pub fn evaluate<T: Real>(f: &MExpansion<Complex<T>>, exponents: &[i64], n: usize) -> Result<Complex<T>> {
    let mut total = Complex::new(T::zero(), T::zero());
    for (l, c) in f.iter() {
        total = total + *c * eval_m_at::<T>(l, exponents, n)?;
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdempotentReport {
    pub k: usize,
    pub n: usize,
    /// `max_{α,β} |𝔢_α(ζ^β) − δ_{αβ}|`.
    pub delta: RelationReport,
    /// `max_β |Σ_α 𝔢_α(ζ^β) − 1|`.
    pub partition_of_unity: RelationReport,
}

impl IdempotentReport {
    pub fn pass(&self) -> bool {
        self.delta.pass && self.partition_of_unity.pass
    }
}

pub fn idempotent_check<T: Real>(k: usize, n: usize, tol: f64) -> Result<IdempotentReport> {
    let basis = alcove(k, n);
    let idem = basis.iter().map(|a| idempotent::<T>(a, k, n)).collect::<Result<Vec<_>>>()?;
    let (mut delta, mut unity) = (0.0f64, 0.0f64);
    for beta in &basis {
        let point = beta.padded(k)?;
        let mut sum = Complex::new(T::zero(), T::zero());
        for (alpha, e) in basis.iter().zip(&idem) {
            let v = evaluate(e, &point, n)?;
            sum = sum + v;
            let target = if alpha == beta { T::one() } else { T::zero() };
            delta = delta.max((v - Complex::new(target, T::zero())).norm().to_f64().unwrap_or(f64::INFINITY));
        }
        unity = unity.max((sum - Complex::new(T::one(), T::zero())).norm().to_f64().unwrap_or(f64::INFINITY));
    }
    Ok(IdempotentReport {
        k,
        n,
        delta: RelationReport::new("e_a(z^b)=delta_ab", delta, tol),
        partition_of_unity: RelationReport::new("sum_a e_a=1", unity, tol),
    })
}
