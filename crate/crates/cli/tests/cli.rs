use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cylfuse")).args(args).output().expect("binary runs")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cylfuse")).args(args).env(key, value).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn chi_values_and_agreement() {
    let out = run(&["chi", "--lambda", "2,1", "--mu", "1", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let j = json(&out);
    assert_eq!(j["value"], 2);
    assert_eq!(j["agree"], true);
    let j = json(&run(&["chi", "--lambda", "1", "--mu", "2"]));
    assert_eq!(j["value"], 0);
    assert_eq!(j["by_count"], 0);
}

#[test]
fn malformed_partitions_are_usage_errors() {
    assert_eq!(run(&["chi", "--lambda", "1,3", "--mu", "1"]).status.code(), Some(2));
    assert_eq!(run(&["chi", "--lambda", "x", "--mu", "1"]).status.code(), Some(2));
    assert_eq!(run(&["chi", "--mu", "1"]).status.code(), Some(2));
}

#[test]
fn cyl_h_example_shape() {
    let out = run(&["cyl-h", "--k", "3", "--n", "4", "--d", "1", "--lambda", "4,3,2", "--mu", "2,2,1"]);
    assert_eq!(out.status.code(), Some(0));
    let j = json(&out);
    assert_eq!(j["degree"], 8);
    assert_eq!(j["agree"], true);
    assert_eq!(j["m_expansion"][0]["nu"], serde_json::json!([8]));
    assert_eq!(j["m_expansion"][0]["coeff"], 9);
}

#[test]
fn cyl_h_trivial_shape() {
    let j = json(&run(&["cyl-h", "--k", "2", "--n", "3", "--lambda", "3,1", "--mu", "3,1"]));
    assert_eq!(j["degree"], 0);
    assert_eq!(j["m_expansion"], serde_json::json!([{"nu": [], "coeff": 1}]));
    assert_eq!(j["h_expansion"], serde_json::json!([{"nu": [], "N": 1}]));
}

#[test]
fn cyl_h_rejects_non_alcove_weights() {
    let out = run(&["cyl-h", "--k", "2", "--n", "3", "--lambda", "3,1", "--mu", "4,1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["cyl-h", "--k", "2", "--n", "3", "--lambda", "3,1", "--mu", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cell_cap_from_environment() {
    let args = ["cyl-h", "--k", "3", "--n", "4", "--d", "1", "--lambda", "4,3,2", "--mu", "2,2,1"];
    assert_eq!(run_env(&args, "CYLFUSE_MAX_CELLS", "7").status.code(), Some(2));
    assert_eq!(run_env(&args, "CYLFUSE_MAX_CELLS", "8").status.code(), Some(0));
    assert_eq!(run_env(&args, "CYLFUSE_MAX_CELLS", "many").status.code(), Some(2));
}

#[test]
fn cyl_chi_example() {
    let j = json(&run(&["cyl-chi", "--k", "3", "--n", "4", "--d", "1", "--lambda", "4,3,2", "--mu", "2,2,1"]));
    assert_eq!(j["value"], 9);
    assert_eq!(j["agree"], true);
}

#[test]
fn skew_h_example() {
    let j = json(&run(&["skew-h", "--lambda", "2,1", "--mu", "1", "--k", "2"]));
    assert_eq!(j["m_expansion"], serde_json::json!([{"nu": [2], "coeff": 2}, {"nu": [1, 1], "coeff": 3}]));
}

#[test]
fn fusion_product_and_single_coefficient() {
    let j = json(&run(&["fusion", "--k", "1", "--n", "3", "--lambda", "2", "--mu", "2"]));
    assert_eq!(j["product"], serde_json::json!([{"nu": [1], "d": 1, "N": 1}]));
    let out = run(&["fusion", "--k", "2", "--n", "3", "--lambda", "2,2", "--mu", "4,1", "--nu", "3,3"]);
    assert_eq!(out.status.code(), Some(0));
    let j = json(&out);
    assert_eq!(j["N"], 2);
    assert_eq!(j["N"], j["N_reduced"]);
}

#[test]
fn fusion_table_level_one() {
    let out = run(&["fusion-table", "--k", "1", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let j = json(&out);
    let entries = j["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 16);
    assert!(entries.iter().all(|e| e["N"] == 1));
    let csv = run(&["fusion-table", "--k", "1", "--n", "4", "--format", "csv"]);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert!(text.starts_with("lambda,mu,nu,d,N\n"));
    assert_eq!(text.lines().count(), 17);
}

#[test]
fn verlinde_passes() {
    let out = run(&["verlinde", "--k", "2", "--n", "3", "--tol", "1e-6"]);
    assert_eq!(out.status.code(), Some(0));
    let j = json(&out);
    assert_eq!(j["pass"], true);
    assert_eq!(j["checked"], 216);
    assert_eq!(j["reading"], "inverse-matrix");
}

#[test]
fn modular_and_idempotents_pass() {
    let j = json(&run(&["modular", "--k", "2", "--n", "3"]));
    assert_eq!(j["pass"], true);
    assert!(j["relations"].as_array().unwrap().iter().any(|r| r["relation"] == "(ST)^3=S^2"));
    let out = run(&["idempotents", "--k", "2", "--n", "4", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("relation,max_dev,tol,pass\n"));
}

#[test]
fn safety_limit() {
    assert_eq!(run(&["fusion-table", "--k", "5", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["modular", "--k", "1", "--n", "9"]).status.code(), Some(2));
    assert_eq!(run(&["modular", "--k", "1", "--n", "9", "--unsafe-sizes"]).status.code(), Some(0));
    assert_eq!(run(&["modular", "--k", "0", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["modular", "--k", "2", "--n", "3", "--tol", "0"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["modular", "--k", "3", "--n", "3"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["fusion-table", "--k", "2", "--n", "4"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn chi_has_a_csv_form() {
    let out = run(&["chi", "--lambda", "2", "--mu", "1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("lambda,mu,k,value,by_count,agree\n"));
}

#[test]
fn selftest_passes_and_is_deterministic() {
    let first = run(&["selftest", "--seed", "5"]);
    assert_eq!(first.status.code(), Some(0));
    let j = json(&first);
    assert_eq!(j["pass"], true);
    assert_eq!(j["criteria"].as_array().unwrap().len(), 12);
    assert_eq!(first.stdout, run(&["selftest", "--seed", "5"]).stdout);
}
