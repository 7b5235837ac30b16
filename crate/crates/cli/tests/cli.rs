use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn mpgen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mpgen")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = mpgen(&all);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn has_float(v: &Value) -> bool {
    match v {
        Value::Number(n) => n.is_f64(),
        Value::Array(a) => a.iter().any(has_float),
        Value::Object(o) => o.values().any(has_float),
        _ => false,
    }
}

#[test]
fn classify_omega() {
    let v = json(&["classify", "L(St(1) v^1/2; T{})"]);
    assert_eq!(v["generic"], true);
    assert_eq!(v["generic_via_coefficient"], true);
    assert_eq!(v["standard_reducible"], true);
    assert_eq!(v["first_occurrence"]["l"], 2);
    assert_eq!(v["first_occurrence"]["m_up"], 7);
    assert!(!has_float(&v));
}

#[test]
fn table_of_mu0_has_four_entries() {
    let v = json(&["table", "T{}", "--depth", "1"]);
    let lifts = v["lifts"].as_array().unwrap();
    assert_eq!(lifts.len(), 4);
    let ms: Vec<i64> = lifts.iter().map(|x| x["m"].as_i64().unwrap()).collect();
    assert_eq!(ms, vec![1, 3, 3, 5]);
    assert_eq!(lifts[1]["gl_factors"][0]["b"], "1/2");
    assert_eq!(lifts[1]["tempered"]["symbol"], "theta");
    assert!(!has_float(&v));
}

#[test]
fn lift_by_target_dimension() {
    let v = json(&["lift", "L(St(1) v^1/2; T{})", "--tower", "nonsplit", "--level", "m=7"]);
    let x = &v["lifts"][0];
    assert_eq!(x["l"], -4);
    assert_eq!(x["gl_factors"][0]["a"], "3/2");
    assert_eq!(x["tempered"]["level"], -2);
    let z = json(&["lift", "L(St(1) v^1/2; T{})", "--tower", "nonsplit", "--level", "-2"]);
    assert_eq!(z["lifts"][0]["zero"], true);
    let t = json(&["lift", "L(St(2) v^1; T{1*S4})", "--tower", "chi:a", "--level", "0"]);
    assert_eq!(t["lifts"][0]["gl_factors"][0]["rho"], "chi:a");
}

#[test]
fn gamma_ord_breakdown() {
    let v = json(&["gamma-ord", "std", "St(2) v^1", "--at", "-3/2"]);
    assert_eq!(v["order"], 1);
    assert_eq!(v["terms"].as_array().unwrap().len(), 1);
    let c = json(&["gamma-ord", "coeff", "St(2) v^1", "{1*S2}", "--at", "0"]);
    assert_eq!(c["coefficient"]["numerator"], -2);
    assert_eq!(c["order"], -1);
}

#[test]
fn exit_codes() {
    assert_eq!(mpgen(&["classify", "L(St(2) v^0; T{})"]).status.code(), Some(1));
    let bad = mpgen(&["classify", "L(St(1) v^1/3; T{})"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("column 11"));
    assert_eq!(mpgen(&["occurrence", "L(St(2) v^1; T{1*S2})"]).status.code(), Some(1));
    assert_eq!(mpgen(&["lift", "T{}", "--level", "1"]).status.code(), Some(1));
    assert_eq!(mpgen(&["classify", "T{1*S3}"]).status.code(), Some(1));
}

#[test]
fn batch_is_ndjson() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mpgen"))
        .args(["occurrence", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"T{}\n\n# comment\nL(St(1) v^1/2; T{})\nnonsense\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let rows: Vec<Value> =
        String::from_utf8(out.stdout).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[1]["first_occurrence"]["m_up"], 7);
    assert_eq!(rows[2]["exit_code"], 1);
}

#[test]
fn text_mode_uses_langlands_notation() {
    let out = mpgen(&["table", "L(St(1) v^1/2; T{})", "--depth", "0"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("split l=2 O(1): theta_0(sigma){}"), "{s}");
    assert!(s.contains("nonsplit l=-4 O(7): L(St(2) v^1; theta_-2(sigma){1*S2})"), "{s}");
}
