use cylfuse::checks::{self, format_line, fusion_h_sum};
use cylfuse::fusion::{n_coefficient, n_reduced, FusionAlgebra, FusionTable};
use cylfuse::modular::{
    format_float, idempotent_check, modular_relations_report, RelationReport, Verlinde, VerlindeReading,
};
use cylfuse::rppgen::h_skew_expansion;
use cylfuse::symcore::{chi_skew, chi_skew_by_count};
use cylfuse::{CylindricRpp, Int, MExpansion, Partition};
use serde_json::{json, Value};

use crate::output::{float, int, part, part_csv, Output};
use crate::{Command, RunConfig, DEFAULT_MAX_CELLS, MAX_K, MAX_N};

type Res<T> = Result<T, String>;

pub fn run(cmd: Command, cfg: &RunConfig) -> Res<Output> {
    match cmd {
        Command::Chi => chi(cfg),
        Command::CylChi => cyl_chi(cfg),
        Command::SkewH => skew_h(cfg),
        Command::CylH => cyl_h(cfg),
        Command::Fusion => fusion(cfg),
        Command::FusionTable => fusion_table(cfg),
        Command::Verlinde => verlinde(cfg),
        Command::Idempotents => idempotents(cfg),
        Command::Modular => modular(cfg),
        Command::Selftest => selftest(cfg),
    }
}

fn need<'a>(p: &'a Option<Partition>, name: &str) -> Res<&'a Partition> {
    p.as_ref().ok_or_else(|| format!("--{name} is required"))
}

fn level(cfg: &RunConfig) -> Res<(usize, usize)> {
    let k = cfg.k.ok_or("--k is required")?;
    let n = cfg.n.ok_or("--n is required")?;
    if k == 0 || n == 0 {
        return Err("--k and --n must be positive".into());
    }
    if !cfg.unsafe_sizes && (k > MAX_K || n > MAX_N) {
        return Err(format!(
            "(k, n) = ({k}, {n}) exceeds the safety limit k ≤ {MAX_K}, n ≤ {MAX_N}; pass --unsafe-sizes to override"
        ));
    }
    Ok((k, n))
}

fn tolerance(cfg: &RunConfig, default: f64) -> Res<f64> {
    let tol = cfg.tol.unwrap_or(default);
    if tol.is_nan() || tol <= 0.0 {
        return Err("--tol must be positive".into());
    }
    Ok(tol)
}

fn max_cells() -> Res<u64> {
    match std::env::var("CYLFUSE_MAX_CELLS") {
        Ok(v) => v.trim().parse().map_err(|_| format!("CYLFUSE_MAX_CELLS={v:?} is not a nonnegative integer")),
        Err(_) => Ok(DEFAULT_MAX_CELLS),
    }
}

fn check_cells(cells: i64) -> Res<()> {
    let cap = max_cells()?;
    if cells > cap as i64 {
        return Err(format!("shape has {cells} cells, above the enumeration cap {cap} (CYLFUSE_MAX_CELLS)"));
    }
    Ok(())
}

fn err(e: cylfuse::Error) -> String {
    e.to_string()
}

fn expansion_rows(e: &MExpansion<Int>) -> (Vec<Value>, Vec<Vec<String>>) {
    // descending order of ν, matching the basis order elsewhere
    let terms: Vec<_> = e.iter().collect::<Vec<_>>().into_iter().rev().collect();
    let json = terms.iter().map(|(p, c)| json!({"nu": part(p), "coeff": int(c)})).collect();
    let rows = terms.iter().map(|(p, c)| vec![part_csv(p), c.to_string()]).collect();
    (json, rows)
}

fn chi(cfg: &RunConfig) -> Res<Output> {
    let (l, m) = (need(&cfg.lambda, "lambda")?, need(&cfg.mu, "mu")?);
    let k = cfg.k.unwrap_or(l.len().max(m.len()).max(1));
    if !cfg.unsafe_sizes && k > MAX_K {
        return Err(format!("k = {k} exceeds the safety limit {MAX_K}; pass --unsafe-sizes to override"));
    }
    check_cells(l.size() as i64)?;
    let value = chi_skew(l, m);
    let by_count = chi_skew_by_count(l, m, k).map_err(err)?;
    let agree = value == by_count;
    let j = json!({"lambda": part(l), "mu": part(m), "k": k, "value": int(&value), "by_count": int(&by_count), "agree": agree});
    Ok(Output::new(j, agree).table(
        vec!["lambda", "mu", "k", "value", "by_count", "agree"],
        vec![vec![part_csv(l), part_csv(m), k.to_string(), value.to_string(), by_count.to_string(), agree.to_string()]],
    ))
}

fn cyl_chi(cfg: &RunConfig) -> Res<Output> {
    let (k, n) = level(cfg)?;
    let (l, m) = (need(&cfg.lambda, "lambda")?, need(&cfg.mu, "mu")?);
    let rpp = CylindricRpp::new(k, n).map_err(err)?;
    let value = rpp.chi(l, cfg.d, m).map_err(err)?;
    let by_count = rpp.chi_by_count(l, cfg.d, m).map_err(err)?;
    let agree = value == by_count;
    let j = json!({
        "k": k, "n": n, "d": cfg.d, "lambda": part(l), "mu": part(m),
        "value": int(&value), "by_count": int(&by_count), "agree": agree
    });
    Ok(Output::new(j, agree).table(
        vec!["lambda", "d", "mu", "value", "by_count", "agree"],
        vec![vec![
            part_csv(l),
            cfg.d.to_string(),
            part_csv(m),
            value.to_string(),
            by_count.to_string(),
            agree.to_string(),
        ]],
    ))
}

fn skew_h(cfg: &RunConfig) -> Res<Output> {
    let (l, m) = (need(&cfg.lambda, "lambda")?, need(&cfg.mu, "mu")?);
    let k = cfg.k.unwrap_or_else(|| (l.size().saturating_sub(m.size()) as usize).max(1));
    if !cfg.unsafe_sizes && k > MAX_K && cfg.k.is_some() {
        return Err(format!("k = {k} exceeds the safety limit {MAX_K}; pass --unsafe-sizes to override"));
    }
    check_cells(l.size() as i64 - m.size() as i64)?;
    let e = h_skew_expansion(l, m, k);
    let (terms, rows) = expansion_rows(&e);
    let degree = if l.contains(m) { Some(l.size() - m.size()) } else { None };
    let j = json!({"lambda": part(l), "mu": part(m), "k": k, "degree": degree, "m_expansion": terms});
    Ok(Output::new(j, true).table(vec!["nu", "coeff"], rows))
}

fn cyl_h(cfg: &RunConfig) -> Res<Output> {
    let (k, n) = level(cfg)?;
    let (l, m) = (need(&cfg.lambda, "lambda")?, need(&cfg.mu, "mu")?);
    let rpp = CylindricRpp::new(k, n).map_err(err)?;
    let degree = n as i64 * cfg.d as i64 + l.size() as i64 - m.size() as i64;
    rpp.chi(l, cfg.d, m).map_err(err)?;
    check_cells(degree)?;
    let e = rpp.expansion(l, cfg.d, m).map_err(err)?;
    let (terms, rows) = expansion_rows(&e);
    let mut h_terms = Vec::new();
    if degree >= 0 {
        let deg = degree as u64;
        for nu in Partition::all_of_size(deg, k, deg as u32) {
            let c = n_coefficient(m, &nu, l, k, n).map_err(err)?;
            if c != Int::from(0) {
                h_terms.push(json!({"nu": part(&nu), "N": int(&c)}));
            }
        }
    }
    let agree = e == fusion_h_sum(l, cfg.d, m, k, n, k).map_err(err)?;
    let j = json!({
        "k": k, "n": n, "d": cfg.d, "lambda": part(l), "mu": part(m), "degree": degree,
        "m_expansion": terms, "h_expansion": h_terms, "agree": agree
    });
    Ok(Output::new(j, agree).table(vec!["nu", "coeff"], rows))
}

fn fusion(cfg: &RunConfig) -> Res<Output> {
    let (k, n) = level(cfg)?;
    let (l, m) = (need(&cfg.lambda, "lambda")?, need(&cfg.mu, "mu")?);
    if let Some(nu) = &cfg.nu {
        // single coefficient N_{λμ}^ν; μ may be any weight with at most k parts
        let direct = n_coefficient(l, m, nu, k, n).map_err(err)?;
        let reduced = n_reduced(l, m, nu, k, n).map_err(err)?;
        let agree = direct == reduced;
        let j = json!({
            "k": k, "n": n, "lambda": part(l), "mu": part(m), "nu": part(nu),
            "N": int(&direct), "N_reduced": int(&reduced), "agree": agree
        });
        return Ok(Output::new(j, agree).table(
            vec!["lambda", "mu", "nu", "N", "N_reduced"],
            vec![vec![part_csv(l), part_csv(m), part_csv(nu), direct.to_string(), reduced.to_string()]],
        ));
    }
    let alg = FusionAlgebra::new(k, n).map_err(err)?;
    let mut consts = alg.structure_constants(l, m).map_err(err)?;
    consts.sort_by(|a, b| b.0.cmp(&a.0));
    let terms: Vec<Value> = consts.iter().map(|(nu, d, v)| json!({"nu": part(nu), "d": d, "N": int(v)})).collect();
    let rows = consts.iter().map(|(nu, d, v)| vec![part_csv(nu), d.to_string(), v.to_string()]).collect();
    let j = json!({"k": k, "n": n, "lambda": part(l), "mu": part(m), "product": terms});
    Ok(Output::new(j, true).table(vec!["nu", "d", "N"], rows))
}

fn fusion_table(cfg: &RunConfig) -> Res<Output> {
    let (k, n) = level(cfg)?;
    let table = FusionTable::from_algebra(&FusionAlgebra::new(k, n).map_err(err)?).map_err(err)?;
    let j = serde_json::to_value(&table).map_err(|e| e.to_string())?;
    let rows = table
        .entries
        .iter()
        .map(|e| vec![part_csv(&e.lambda), part_csv(&e.mu), part_csv(&e.nu), e.d.to_string(), e.value.to_string()])
        .collect();
    Ok(Output::new(j, true).table(vec!["lambda", "mu", "nu", "d", "N"], rows))
}

fn verlinde(cfg: &RunConfig) -> Res<Output> {
    let (k, n) = level(cfg)?;
    let tol = tolerance(cfg, checks::VERLINDE_TOL)?;
    let v = Verlinde::new(k, n).map_err(err)?;
    let (mut checked, mut max_dev, mut mismatches, mut rows, mut entrywise_bad) =
        (0u64, 0.0f64, Vec::new(), Vec::new(), 0u64);
    for l in v.basis() {
        for m in v.basis() {
            for nu in v.basis() {
                let exact = n_coefficient(l, m, nu, k, n).map_err(err)?;
                let e = exact.to_string().parse::<f64>().unwrap_or(f64::NAN);
                let z = v.value(l, m, nu, VerlindeReading::InverseMatrix).map_err(err)?;
                let dev = (z.re - e).hypot(z.im);
                checked += 1;
                max_dev = max_dev.max(dev);
                let ok = dev <= tol;
                if !ok {
                    mismatches.push(json!({
                        "lambda": part(l), "mu": part(m), "nu": part(nu),
                        "re": float(z.re), "im": float(z.im), "N": int(&exact)
                    }));
                }
                match v.value(l, m, nu, VerlindeReading::EntrywiseReciprocal) {
                    Ok(w) if (w.re - e).hypot(w.im) <= tol => {}
                    _ => entrywise_bad += 1,
                }
                rows.push(vec![
                    part_csv(l),
                    part_csv(m),
                    part_csv(nu),
                    format_float(z.re),
                    format_float(z.im),
                    exact.to_string(),
                    ok.to_string(),
                ]);
            }
        }
    }
    let pass = mismatches.is_empty();
    let j = json!({
        "k": k, "n": n, "tol": float(tol), "reading": VerlindeReading::InverseMatrix,
        "checked": checked, "max_dev": float(max_dev), "mismatches": mismatches, "pass": pass,
        "entrywise_reciprocal_mismatches": entrywise_bad
    });
    Ok(Output::new(j, pass).table(vec!["lambda", "mu", "nu", "re", "im", "N", "pass"], rows))
}

fn relation_rows(rels: &[RelationReport]) -> Vec<Vec<String>> {
    rels.iter()
        .map(|r| vec![r.relation.clone(), format_float(r.max_dev), format_float(r.tol), r.pass.to_string()])
        .collect()
}

fn relation_json(r: &RelationReport) -> Value {
    json!({"relation": r.relation, "max_dev": float(r.max_dev), "tol": float(r.tol), "pass": r.pass})
}

fn idempotents(cfg: &RunConfig) -> Res<Output> {
    let (k, n) = level(cfg)?;
    let tol = tolerance(cfg, checks::NUMERIC_TOL)?;
    let r = idempotent_check::<f64>(k, n, tol).map_err(err)?;
    let rels = [r.delta.clone(), r.partition_of_unity.clone()];
    let j = json!({"k": k, "n": n, "relations": rels.iter().map(relation_json).collect::<Vec<_>>(), "pass": r.pass()});
    Ok(Output::new(j, r.pass()).table(vec!["relation", "max_dev", "tol", "pass"], relation_rows(&rels)))
}

fn modular(cfg: &RunConfig) -> Res<Output> {
    let (k, n) = level(cfg)?;
    let tol = tolerance(cfg, checks::NUMERIC_TOL)?;
    let r = modular_relations_report::<f64>(k, n, tol).map_err(err)?;
    let j = json!({"k": k, "n": n, "relations": r.relations.iter().map(relation_json).collect::<Vec<_>>(), "pass": r.pass()});
    Ok(Output::new(j, r.pass()).table(vec!["relation", "max_dev", "tol", "pass"], relation_rows(&r.relations)))
}

fn selftest(cfg: &RunConfig) -> Res<Output> {
    let mut reports = checks::all_criteria().map_err(err)?;
    reports.push(checks::random_orbit_check(cfg.seed, 500).map_err(err)?);
    let pass = reports.iter().all(|r| r.pass);
    let lines: Vec<String> = reports.iter().map(format_line).collect();
    // timings are left out of the JSON so that it stays byte-deterministic
    let j = json!({
        "criteria": reports.iter().map(|r| json!({
            "id": r.id, "name": r.name, "pass": r.pass, "checked": r.checked, "failures": r.failures
        })).collect::<Vec<_>>(),
        "seed": cfg.seed,
        "pass": pass
    });
    let rows = reports
        .iter()
        .map(|r| {
            vec![r.id.to_string(), r.name.clone(), r.pass.to_string(), r.checked.to_string(), r.failures.to_string()]
        })
        .collect();
    Ok(Output::new(j, pass).table(vec!["id", "name", "pass", "checked", "failures"], rows).lines(lines))
}
