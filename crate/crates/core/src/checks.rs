//! The end-to-end verification grid. Each function checks one criterion
//! exhaustively and returns a [`CriterionReport`]; nothing here panics on a
//! mismatch.

use std::time::Instant;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::affine::{alcove, AffinePermutation, LoopFunction};
use crate::fusion::{n_coefficient, n_reduced, FusionAlgebra, FusionElement};
use crate::modular::{idempotent_check, modular_relations_report, Verlinde, VerlindeReading};
use crate::rppgen::{h_skew_expansion, CylindricRpp};
use crate::symcore::{chi_of_weight, chi_skew, chi_skew_by_count, h_expansion};
use crate::{CylindricShape, Int, MExpansion, Partition, Rational, Result};

/// `(k, n)` pairs of the cylindric grid.
pub const CYLINDRIC_GRID: [(usize, usize); 4] = [(2, 3), (2, 4), (3, 3), (3, 4)];
pub const FUSION_GRID: [(usize, usize); 4] = [(1, 4), (2, 3), (2, 4), (3, 3)];
pub const VERLINDE_GRID: [(usize, usize); 4] = [(1, 5), (2, 3), (2, 4), (3, 3)];
pub const IDEMPOTENT_GRID: [(usize, usize); 3] = [(1, 6), (2, 3), (2, 4)];
pub const NUMERIC_TOL: f64 = 1e-9;
pub const VERLINDE_TOL: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionReport {
    pub id: u32,
    pub name: String,
    pub pass: bool,
    /// Number of individual comparisons made.
    pub checked: u64,
    pub failures: u64,
    pub detail: String,
    pub elapsed_ms: u128,
}

struct Tally {
    checked: u64,
    failures: u64,
    first: Option<String>,
    start: Instant,
}

impl Tally {
    fn new() -> Self {
        Tally { checked: 0, failures: 0, first: None, start: Instant::now() }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(what());
            }
        }
    }

    fn finish(self, id: u32, name: &str, detail: String) -> CriterionReport {
        let detail = match self.first {
            Some(f) => format!("{detail}; first failure: {f}"),
            None => detail,
        };
        CriterionReport {
            id,
            name: name.to_string(),
            pass: self.failures == 0 && self.checked > 0,
            checked: self.checked,
            failures: self.failures,
            detail,
            elapsed_ms: self.start.elapsed().as_millis(),
        }
    }
}

/// Criterion 1: `χ_{λ/μ}` closed form against the rearrangement count, `λ, μ ⊆ (4⁴)`.
pub fn skew_chi_closed_form() -> Result<CriterionReport> {
    let mut t = Tally::new();
    for k in 1..=4 {
        let shapes = Partition::all_in_box(k, 4);
        for l in &shapes {
            for m in &shapes {
                let ok = chi_skew(l, m) == chi_skew_by_count(l, m, k)?;
                t.record(ok, || format!("k={k} λ={l} μ={m}"));
            }
        }
    }
    Ok(t.finish(1, "chi_skew closed form = set count", "all λ, μ ⊆ (4,4,4,4), k ≤ 4".into()))
}

/// Criterion 2: Plane-partition coefficients against `Σ_α L_{λα} f^ν_{αμ}`, `|λ| ≤ 6`.
pub fn skew_h_two_routes() -> Result<CriterionReport> {
    let mut t = Tally::new();
    let k = 6;
    for size in 0..=6u64 {
        for l in Partition::all_of_size(size, k, size as u32) {
            for m in all_inside(&l) {
                let e = h_skew_expansion(&l, &m, k);
                let deg = l.size() - m.size();
                for nu in Partition::all_of_size(deg, k, deg as u32) {
                    let ok = e.coeff(&nu) == chi_of_weight(&l, &m, &nu);
                    t.record(ok, || format!("λ={l} μ={m} ν={nu}"));
                }
            }
        }
    }
    Ok(t.finish(2, "skew h coefficients: plane partitions = L·f route", "all λ, μ ⊆ λ, ν with |λ| ≤ 6".into()))
}

fn all_inside(l: &Partition) -> Vec<Partition> {
    (0..=l.size()).flat_map(|s| Partition::between(&Partition::empty(), l, s)).collect()
}

/// Criterion 3: Cylindric `χ` by conjugate binomials against the affine count, with the
/// search band doubled as a guard.
pub fn cylindric_chi_two_routes() -> Result<CriterionReport> {
    let mut t = Tally::new();
    for (k, n) in CYLINDRIC_GRID {
        let rpp = CylindricRpp::new(k, n)?;
        for l in rpp.alcove() {
            for m in rpp.alcove() {
                for d in 0..=2u64 {
                    let closed = rpp.chi(l, d, m)?;
                    let b = rpp.default_bound(l, d);
                    let count = rpp.chi_by_count_with_bound(l, d, m, b)?;
                    let doubled = rpp.chi_by_count_with_bound(l, d, m, 2 * b)?;
                    t.record(closed == count && count == doubled, || {
                        format!("(k,n)=({k},{n}) {l}/{d}/{m}: {closed} vs {count} vs {doubled}")
                    });
                }
            }
        }
    }
    Ok(t.finish(3, "cylindric chi closed form = affine count (B and 2B)", "λ, μ ∈ alcove, d ≤ 2".into()))
}

/// `Σ_ν N_{μν}^λ h_ν` in `vars` variables.
pub fn fusion_h_sum(
    lambda: &Partition,
    d: u64,
    mu: &Partition,
    k: usize,
    n: usize,
    vars: usize,
) -> Result<MExpansion<Int>> {
    let deg = n as i64 * d as i64 + lambda.size() as i64 - mu.size() as i64;
    let mut out = MExpansion::zero(vars);
    if deg < 0 {
        return Ok(out);
    }
    let deg = deg as u64;
    for nu in Partition::all_of_size(deg, k, deg as u32) {
        let c = n_coefficient(mu, &nu, lambda, k, n)?;
        if !c.is_zero() {
            out = &out + &h_expansion(&nu, vars).scale(&c);
        }
    }
    Ok(out)
}

/// Criterion 4: `h_{λ/d/μ} = Σ_ν N_{μν}^λ h_ν` as polynomials in `k` variables.
pub fn cylindric_h_in_h_basis() -> Result<CriterionReport> {
    let mut t = Tally::new();
    for (k, n) in CYLINDRIC_GRID {
        let rpp = CylindricRpp::new(k, n)?;
        for l in rpp.alcove() {
            for m in rpp.alcove() {
                for d in 0..=2u64 {
                    let lhs = rpp.expansion(l, d, m)?;
                    let rhs = fusion_h_sum(l, d, m, k, n, k)?;
                    t.record(lhs == rhs, || format!("(k,n)=({k},{n}) {l}/{d}/{m}"));
                }
            }
        }
    }
    Ok(t.finish(4, "cylindric h = Σ N h_ν", "λ, μ ∈ alcove, d ≤ 2".into()))
}

/// Criterion 5: `N` through the alcove representative and multinomials.
pub fn reduced_coefficients() -> Result<CriterionReport> {
    let mut t = Tally::new();
    for (k, n) in [(2, 3), (3, 3)] {
        let basis = alcove(k, n);
        for size in 0..=(n + k) as u64 {
            for nu in Partition::all_of_size(size, k, size as u32) {
                for m in &basis {
                    for l in &basis {
                        let ok = n_reduced(m, &nu, l, k, n)? == n_coefficient(m, &nu, l, k, n)?;
                        t.record(ok, || format!("(k,n)=({k},{n}) μ={m} ν={nu} λ={l}"));
                    }
                }
            }
        }
    }
    Ok(t.finish(5, "reduced N = N", "ν with ≤ k parts, |ν| ≤ n + k".into()))
}

/// Criterion 6: Commutativity, associativity, the unit and a nonzero Gram determinant.
pub fn algebra_axioms() -> Result<CriterionReport> {
    let mut t = Tally::new();
    for (k, n) in FUSION_GRID {
        let alg = FusionAlgebra::new(k, n)?;
        let elems: Vec<FusionElement<Int>> = alg.basis().iter().map(|p| alg.basis_element(p)).collect::<Result<_>>()?;
        let unit = alg.unit::<Int>();
        for (i, a) in elems.iter().enumerate() {
            t.record(alg.product(&unit, a)? == *a, || format!("(k,n)=({k},{n}) unit on #{i}"));
            for (j, b) in elems.iter().enumerate() {
                let ab = alg.product(a, b)?;
                t.record(ab == alg.product(b, a)?, || format!("(k,n)=({k},{n}) commutativity #{i},#{j}"));
                for (l, c) in elems.iter().enumerate() {
                    let left = alg.product(&ab, c)?;
                    let right = alg.product(a, &alg.product(b, c)?)?;
                    t.record(left == right, || format!("(k,n)=({k},{n}) associativity #{i},#{j},#{l}"));
                }
            }
        }
        let det = alg.gram_determinant(&Rational::one())?;
        t.record(!det.is_zero(), || format!("(k,n)=({k},{n}) singular Gram matrix"));
    }
    Ok(t.finish(6, "fusion algebra: commutative, associative, unit, Frobenius", "all basis triples".into()))
}

/// Criterion 7: `N_{ab}^c = δ_{a+b ≡ c mod n}` for `k = 1`, `n ≤ 8`.
pub fn level_one_rule() -> Result<CriterionReport> {
    let mut t = Tally::new();
    for n in 1..=8usize {
        for a in 1..=n as u32 {
            for b in 1..=n as u32 {
                for c in 1..=n as u32 {
                    let expected = Int::from(((a + b) as usize % n == c as usize % n) as u8);
                    let got = n_coefficient(
                        &Partition::new(vec![a])?,
                        &Partition::new(vec![b])?,
                        &Partition::new(vec![c])?,
                        1,
                        n,
                    )?;
                    t.record(got == expected, || format!("n={n} a={a} b={b} c={c}: {got}"));
                }
            }
        }
    }
    Ok(t.finish(7, "k = 1 fusion is the cyclic group ring", "n ≤ 8".into()))
}

/// Criterion 8: Residue formula against `N` with the given reading of `𝒮^{−1}`.
pub fn verlinde_formula(reading: VerlindeReading) -> Result<CriterionReport> {
    let mut t = Tally::new();
    let mut worst = 0.0f64;
    for (k, n) in VERLINDE_GRID {
        let v = Verlinde::new(k, n)?;
        for l in v.basis() {
            for m in v.basis() {
                for nu in v.basis() {
                    let exact = n_coefficient(l, m, nu, k, n)?;
                    let (ok, shown) = match v.value(l, m, nu, reading) {
                        Ok(z) => {
                            let e = num_traits::ToPrimitive::to_f64(&exact).unwrap_or(f64::NAN);
                            let dev = (z - num_complex::Complex::new(e, 0.0)).norm();
                            worst = worst.max(dev);
                            (dev < VERLINDE_TOL, format!("{:.6}{:+.6}i", z.re, z.im))
                        }
                        Err(e) => (false, e.to_string()),
                    };
                    t.record(ok, || format!("(k,n)=({k},{n}) λ={l} μ={m} ν={nu}: {shown} vs {exact}"));
                }
            }
        }
    }
    let name = match reading {
        VerlindeReading::InverseMatrix => "residue formula = N (inverse-matrix reading)",
        VerlindeReading::EntrywiseReciprocal => "residue formula = N (entrywise-reciprocal reading)",
    };
    Ok(t.finish(8, name, format!("every triple, max |value − N| = {worst:.3e}")))
}

/// Criterion 9: Modular relations at every `(k, n)` of the Verlinde grid.
pub fn modular_relations() -> Result<CriterionReport> {
    let mut t = Tally::new();
    let mut worst = 0.0f64;
    for (k, n) in VERLINDE_GRID {
        let r = modular_relations_report::<f64>(k, n, NUMERIC_TOL)?;
        worst = worst.max(r.max_dev());
        for rel in &r.relations {
            t.record(rel.pass, || format!("(k,n)=({k},{n}) {} deviates by {:e}", rel.relation, rel.max_dev));
        }
    }
    Ok(t.finish(9, "modular relations S, T, C", format!("max deviation {worst:.3e}")))
}

/// Criterion 10: Idempotents evaluate to `δ_{αβ}` on the spectrum.
pub fn idempotents() -> Result<CriterionReport> {
    let mut t = Tally::new();
    let mut worst = 0.0f64;
    for (k, n) in IDEMPOTENT_GRID {
        let r = idempotent_check::<f64>(k, n, NUMERIC_TOL)?;
        worst = worst.max(r.delta.max_dev).max(r.partition_of_unity.max_dev);
        t.record(r.delta.pass, || format!("(k,n)=({k},{n}) δ deviation {:e}", r.delta.max_dev));
        t.record(r.partition_of_unity.pass, || {
            format!("(k,n)=({k},{n}) Σ deviation {:e}", r.partition_of_unity.max_dev)
        });
    }
    Ok(t.finish(10, "idempotents e_α(ζ^β) = δ_αβ", format!("max deviation {worst:.3e}")))
}

/// Criterion 11: The shape `(4,3,2)/1/(2,2,1)` at `(k,n) = (3,4)`.
pub fn example_shape() -> Result<CriterionReport> {
    let mut t = Tally::new();
    let (l, m) = (Partition::new(vec![4, 3, 2])?, Partition::new(vec![2, 2, 1])?);
    let shape = CylindricShape::new(&l, 1, &m, 3, 4)?;
    t.record(shape.cell_count() == 8, || format!("{} cells", shape.cell_count()));
    t.record(shape.cells().len() == 8, || format!("{} listed cells", shape.cells().len()));
    let chains = CylindricRpp::new(3, 4)?.chains(&l, 1, &m, &[4, 3, 1])?;
    t.record(!chains.is_empty(), || "no plane partition of weight (4,3,1)".into());
    Ok(t.finish(
        11,
        "example shape: 8 cells, weight (4,3,1) realised",
        format!("{} chains of weight (4,3,1)", chains.len()),
    ))
}

/// Random orbit points `λ∘w` reduce back to `λ`, and the witness reproduces
/// the reduction.
pub fn random_orbit_check(seed: u64, samples: usize) -> Result<CriterionReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::new();
    for _ in 0..samples {
        let k = rng.gen_range(2..=4usize);
        let n = rng.gen_range(1..=6usize);
        let points = alcove(k, n);
        let lambda = &points[rng.gen_range(0..points.len())];
        let mut w = AffinePermutation::identity(k);
        for _ in 0..rng.gen_range(0..12) {
            let g = match rng.gen_range(0..3) {
                0 => AffinePermutation::sigma(rng.gen_range(0..k), k)?,
                1 => AffinePermutation::y_generator(rng.gen_range(1..=k), k)?,
                _ => AffinePermutation::y_generator(rng.gen_range(1..=k), k)?.inverse(),
            };
            w = w.compose(&g)?;
        }
        let point = LoopFunction::from_alcove(lambda, k, n)?.act(&w)?;
        let (back, witness) = point.reduce_to_alcove();
        let replay = point.act(&witness)?.to_partition().ok();
        t.record(back == *lambda && replay.as_ref() == Some(lambda), || {
            format!("(k,n)=({k},{n}) λ={lambda} w={w:?} reduced to {back}")
        });
    }
    Ok(t.finish(0, "random affine orbits reduce to their alcove point", format!("seed {seed}, {samples} samples")))
}

/// Criteria 1 to 11 in order, with the primary Verlinde reading.
pub fn all_criteria() -> Result<Vec<CriterionReport>> {
    Ok(vec![
        skew_chi_closed_form()?,
        skew_h_two_routes()?,
        cylindric_chi_two_routes()?,
        cylindric_h_in_h_basis()?,
        reduced_coefficients()?,
        algebra_axioms()?,
        level_one_rule()?,
        verlinde_formula(VerlindeReading::InverseMatrix)?,
        modular_relations()?,
        idempotents()?,
        example_shape()?,
    ])
}

/// One summary line per report.
pub fn format_line(r: &CriterionReport) -> String {
    let label = if r.id == 0 { "extra check ".to_string() } else { format!("criterion {:>2}", r.id) };
    format!(
        "[{}] {label}: {} ({} checks, {} failures, {} ms) {}",
        if r.pass { "PASS" } else { "FAIL" },
        r.name,
        r.checked,
        r.failures,
        r.elapsed_ms,
        r.detail
    )
}
