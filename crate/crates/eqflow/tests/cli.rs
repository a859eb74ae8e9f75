//! End-to-end tests of the `eqflow` binary: output contracts and exit
//! codes (0 ok, 1 verification failure, 2 input error).

use std::path::PathBuf;
use std::process::{Command, Output};

fn eqflow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqflow"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("eqflow-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

const FIX_B: &str = "eqnet 1\nbuyers 2\ngoods 2\nbudget 1 3\nbudget 2 3\nprice 1 2\nprice 2 2\nedge 1 1\nedge 2 1\nedge 2 2\n";
const FIX_C: &str = "eqnet 1\nbuyers 2\ngoods 2\nbudget 1 5\nbudget 2 1\nprice 1 2\nprice 2 2\nedge 1 1\nedge 2 2\n";
const FIX_A: &str = "eqnet 1\nbuyers 1\ngoods 1\nbudget 1 2\nprice 1 2\nedge 1 1\n";

#[test]
fn balanced_reports_fixture_values_as_json() {
    let path = write_temp("fixb.eqnet", FIX_B);
    let out = eqflow(&["balanced", path.to_str().unwrap(), "--json", "--verify"]);
    assert!(out.status.success(), "{out:?}");
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["value"], "4");
    assert_eq!(json["surpluses"], serde_json::json!(["1", "1"]));
    assert_eq!(json["breakpoints"], serde_json::json!(["1"]));
    assert_eq!(json["verification"]["balanced"], true);

    let path = write_temp("fixc.eqnet", FIX_C);
    let out = eqflow(&["balanced", path.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["surpluses"], serde_json::json!(["3", "0"]));
    assert_eq!(json["breakpoints"], serde_json::json!(["3"]));
}

#[test]
fn balanced_rejects_malformed_files_with_exit_2() {
    let path = write_temp("bad.eqnet", "eqnet 1\nbuyers 1\ngoods 1\nbudget 1 0\nprice 1 2\nedge 1 1\n");
    let out = eqflow(&["balanced", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("non-positive budget"));

    let out = eqflow(&["balanced", "/nonexistent/net.eqnet"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn breakpoints_lists_move_values() {
    let path = write_temp("fixc-bp.eqnet", FIX_C);
    let out = eqflow(&["breakpoints", path.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["move_lambda"]["b1"], "3");
    assert_eq!(json["move_lambda"]["b2"], "0");
    assert_eq!(json["move_lambda"]["c1"], "3");
    assert_eq!(json["move_lambda"]["c2"], "0");

    let path = write_temp("fixa-bp.eqnet", FIX_A);
    let out = eqflow(&["breakpoints", path.to_str().unwrap(), "--json"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["move_lambda"]["b1"], "0");
    assert_eq!(json["breakpoints"], serde_json::json!([]));

    let path = write_temp("fixb-bp.eqnet", FIX_B);
    let out = eqflow(&["breakpoints", path.to_str().unwrap(), "--json"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for vertex in ["b1", "b2", "c1", "c2"] {
        assert_eq!(json["move_lambda"][vertex], "1");
    }
}

#[test]
fn maxflow_reports_value_and_cut() {
    let path = write_temp("fixb-mf.eqnet", FIX_B);
    let out = eqflow(&["maxflow", path.to_str().unwrap(), "--json"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["value"], "4");

    let path = write_temp("fixc-mf.eqnet", FIX_C);
    let out = eqflow(&["maxflow", path.to_str().unwrap(), "--lambda", "2", "--json"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["value"], "2");
    assert_eq!(json["cut_source_side"], serde_json::json!(["s", "b1", "c1"]));

    let path = write_temp("fixa-mf.eqnet", FIX_A);
    let out = eqflow(&["maxflow", path.to_str().unwrap(), "--lambda", "5", "--json"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["value"], "0");

    let out = eqflow(&["maxflow", path.to_str().unwrap(), "--lambda", "-1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_codes_follow_the_contract() {
    let net = write_temp("fixb-v.eqnet", FIX_B);
    let good = write_temp("good.flow", "flow 1 1 2\nflow 2 2 2\n");
    let out = eqflow(&["verify", net.to_str().unwrap(), "--flow", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");

    let bad = write_temp("bad.flow", "flow 1 1 1\nflow 2 1 1\nflow 2 2 2\n");
    let out = eqflow(&["verify", net.to_str().unwrap(), "--flow", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("flow-locality"));

    let net_a = write_temp("fixa-v.eqnet", FIX_A);
    let zero = write_temp("zero.flow", "");
    let out = eqflow(&["verify", net_a.to_str().unwrap(), "--flow", zero.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("maximality"));

    let out = eqflow(&["verify", net.to_str().unwrap(), "--flow", "/nonexistent.flow"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_writes_parseable_files_and_is_deterministic() {
    let out_path = std::env::temp_dir().join(format!("eqflow-gen-{}.eqnet", std::process::id()));
    let out = eqflow(&[
        "gen", "--random", "5", "5", "10", "--seed", "9", "-o",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{out:?}");
    let first = std::fs::read_to_string(&out_path).unwrap();
    let out = eqflow(&[
        "gen", "--random", "5", "5", "10", "--seed", "9", "-o",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let second = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(first, second);

    let run = eqflow(&["balanced", out_path.to_str().unwrap(), "--verify"]);
    assert_eq!(run.status.code(), Some(0));

    // Block-structured generation hits the specified surpluses.
    let out = eqflow(&[
        "gen", "--blocks", "2:4:1,1:2:0", "--seed", "3", "-o",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{out:?}");
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert!(text.contains("price 1 3") && text.contains("price 3 2"), "{text}");
    let run = eqflow(&["balanced", out_path.to_str().unwrap(), "--json"]);
    let json: serde_json::Value = serde_json::from_slice(&run.stdout).unwrap();
    assert_eq!(json["surpluses"], serde_json::json!(["1", "1", "0"]));

    let out = eqflow(&["gen", "--blocks", "1:4:2,1:4:2", "--seed", "3", "-o", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_emits_both_formats_deterministically() {
    let out = eqflow(&["bench", "--sizes", "8,12", "--seed", "4", "--bits", "6", "--json"]);
    assert!(out.status.success(), "{out:?}");
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = json["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    let again = eqflow(&["bench", "--sizes", "8,12", "--seed", "4", "--bits", "6", "--json"]);
    let json2: serde_json::Value = serde_json::from_slice(&again.stdout).unwrap();
    for (a, b) in rows.iter().zip(json2["rows"].as_array().unwrap()) {
        assert_eq!(a["parametric_calls"], b["parametric_calls"]);
        assert_eq!(a["baseline_calls"], b["baseline_calls"]);
    }

    let out = eqflow(&["bench", "--sizes", "10", "--seed", "4", "--bits", "6"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("call ratio"));
}
