use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_lagsub")).args(args).output().expect("binary runs");
    let code = out.status.code().expect("exit code");
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, json)
}

#[test]
fn cybe_vanishes_on_sl2() {
    let (code, v) = run(&["cybe"]);
    assert_eq!(code, 0);
    assert_eq!(v["residual"], "0");
    assert_eq!(v["algebra"], "A1");
    assert_eq!(v["basis"].as_array().unwrap().len(), 3);
}

#[test]
fn manin_check_on_b2() {
    let (code, v) = run(&["manin-check", "--algebra", "B2"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"]["diagonal"]["dim"], 10);
    assert_eq!(v["verdict"]["intersection_zero"], true);
}

#[test]
fn construct_diagonal() {
    let (code, v) = run(&["construct", "--input", &data("a1_diagonal.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["lagrangian"], true);
    assert_eq!(v["dim"], 3);
    assert_eq!(v["diag_intersection_dim"], 3);
}

#[test]
fn decompose_diagonal_subspace() {
    let (code, v) = run(&["decompose", "--input", &data("a1_diagonal_subspace.json")]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["P"].as_array().unwrap().len(), 2);
}

#[test]
fn decompose_rejects_non_lagrangian() {
    let (code, v) = run(&["decompose", "--input", &data("a1_not_lagrangian.json")]);
    assert_eq!(code, 1);
    assert!(v["error"].is_string());
}

#[test]
fn schema_and_usage_errors_exit_two() {
    assert_eq!(run(&["construct", "--input", &data("unknown_key.json")]).0, 2);
    assert_eq!(run(&["cybe", "--algebra", "Q7"]).0, 2);
    assert_eq!(run(&["catalog", "--algebra", "A3"]).0, 2);
    assert_eq!(run(&["construct", "--input", &data("a1_diagonal.json"), "--center-dim", "1"]).0, 2);
}

#[test]
fn catalog_of_sl2() {
    let (code, v) = run(&["catalog", "--seed", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["labels"].as_array().unwrap().len(), 5);
}

#[test]
fn integrable_sqrt2_reflection() {
    let (code, v) = run(&[
        "integrable",
        "--algebra",
        "A1",
        "--center-dim",
        "2",
        "--field-d",
        "2",
        "--group-form",
        "adjoint",
        "--input",
        &data("a1_center2_sqrt2.json"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["algebraic"], false);
    assert_eq!(v["closed"], false);
}

#[test]
fn geom_check_small() {
    let (code, v) = run(&["geom-check", "--points", "4", "--exact-points", "2", "--seed", "11"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    assert_eq!(v["report"]["points"], 4);
}
