//! End-to-end tests of the `quiver-hh` binary: exit codes, report schema,
//! determinism, and the documented behavior on the bundled example files.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn example(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quiver-hh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> (Value, i32) {
    let mut full: Vec<&str> = args.to_vec();
    full.push("--format");
    full.push("json");
    let out = run(&full);
    let report: Value = serde_json::from_slice(&out.stdout).expect("stdout is a JSON report");
    (report, out.status.code().expect("exit code"))
}

#[test]
fn report_keys_come_in_schema_order() {
    let path = example("dual.quiver");
    let (report, code) = run_json(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let keys: Vec<&String> = report.as_object().unwrap().keys().collect();
    assert_eq!(
        keys,
        ["version", "input_digest", "algebra", "command", "results", "timing_ms"]
    );
    let algebra_keys: Vec<&String> = report["algebra"].as_object().unwrap().keys().collect();
    assert_eq!(algebra_keys, ["dim", "nilpotency", "monomial", "vertices", "arrows"]);
    assert_eq!(report["input_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn all_bundled_examples_validate() {
    for name in [
        "dual.quiver",
        "cycle2.quiver",
        "cycle3.quiver",
        "remark7.quiver",
        "hereditary_a2.quiver",
        "linear_ab.quiver",
    ] {
        let path = example(name);
        let (report, code) = run_json(&["validate", path.to_str().unwrap()]);
        assert_eq!(code, 0, "{name} validates");
        assert!(report["results"]["dim"].as_u64().unwrap() >= 2, "{name} has a basis");
    }
}

#[test]
fn certify_dual_with_three_repetitions() {
    let path = example("dual.quiver");
    let (report, code) = run_json(&["certify", path.to_str().unwrap(), "--m", "3"]);
    assert_eq!(code, 0);
    let results = &report["results"];
    assert_eq!(results["degree"], 2);
    assert_eq!(results["hh_lower_bound"], true);
    assert_eq!(results["is_cycle"], true);
    assert_eq!(results["boundary_status"], "not_in_image");
    assert_eq!(results["xi"][0]["tuple"], "(a; a, a)");
}

#[test]
fn gldim_remark7_is_infinite_with_loop_witness() {
    let path = example("remark7.quiver");
    let (report, code) = run_json(&["gldim", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let results = &report["results"];
    assert_eq!(results["route"], "monomial");
    assert_eq!(results["value"], "infinite");
    assert_eq!(results["witness"], serde_json::json!(["a2*a1"]));
}

#[test]
fn cycles_remark7_finds_nothing() {
    let path = example("remark7.quiver");
    let (report, code) = run_json(&[
        "cycles",
        path.to_str().unwrap(),
        "--m",
        "2",
        "--max-length",
        "8",
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["results"]["witnesses"].as_array().unwrap().len(), 0);
}

#[test]
fn hh_respects_field_override() {
    let path = example("dual.quiver");
    let (over_q, _) = run_json(&["hh", path.to_str().unwrap(), "--max-degree", "4"]);
    let (over_f2, code) = run_json(&[
        "hh",
        path.to_str().unwrap(),
        "--max-degree",
        "4",
        "--field",
        "fp:2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(over_q["results"]["hh_dimensions"], serde_json::json!([2, 1, 1, 1, 1]));
    assert_eq!(over_f2["results"]["hh_dimensions"], serde_json::json!([2, 2, 2, 2, 2]));
}

#[test]
fn missing_file_exits_one_with_error_payload() {
    let (report, code) = run_json(&["validate", "no-such-file.quiver"]);
    assert_eq!(code, 1);
    assert_eq!(report["results"]["error"]["code"], "io_error");
    assert_eq!(report["algebra"], Value::Null);
}

#[test]
fn malformed_presentation_exits_one() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("quiver-hh-cli-bad-{}.quiver", std::process::id()));
    std::fs::write(&path, "field: Q\nvertices: 1\narrow a: 1 -> 9\n").unwrap();
    let (report, code) = run_json(&["validate", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 1);
    assert!(report["results"]["error"]["code"].is_string());
    assert!(report["input_digest"].is_string(), "digest still reported for readable input");
}

#[test]
fn resource_cap_exits_two_with_partial_report() {
    let path = example("dual.quiver");
    let (report, code) = run_json(&["hh", path.to_str().unwrap(), "--max-tuples", "1"]);
    assert_eq!(code, 2);
    assert_eq!(report["results"]["error"]["code"], "resource_limit");
    assert!(report["algebra"]["dim"].as_u64().is_some(), "algebra summary still present");
}

#[test]
fn exhausted_time_budget_exits_two_with_partial_report() {
    let path = example("dual.quiver");
    let (report, code) = run_json(&["hh", path.to_str().unwrap(), "--time-budget-ms", "0"]);
    assert_eq!(code, 2);
    assert_eq!(report["results"]["error"]["code"], "time_budget");
    assert_eq!(report["command"]["options"]["time_budget_ms"], 0);
    assert!(report["algebra"]["dim"].as_u64().is_some(), "algebra summary still present");
}

#[test]
fn no_two_truncated_cycle_is_a_reported_error() {
    let path = example("remark7.quiver");
    let (report, code) = run_json(&["certify", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(report["results"]["error"]["code"], "no_two_truncated_cycle");
}

#[test]
fn compare_without_witness_reports_absence() {
    let path = example("hereditary_a2.quiver");
    let (report, code) = run_json(&["compare", path.to_str().unwrap(), "--m", "2"]);
    assert_eq!(code, 0);
    assert_eq!(report["results"]["witness_found"], false);
}

#[test]
fn compare_with_witness_reports_domination() {
    let path = example("cycle3.quiver");
    let (report, code) = run_json(&[
        "compare",
        path.to_str().unwrap(),
        "--m",
        "2",
        "--max-degree",
        "3",
    ]);
    assert_eq!(code, 0);
    let results = &report["results"];
    assert_eq!(results["witness_found"], true);
    assert_eq!(results["l"], 3);
    assert_eq!(results["dominated"], true);
    assert_eq!(results["hh_dimensions"], results["cycle_algebra_hh_dimensions"]);
}

#[test]
fn corpus_runs_without_input_file() {
    let (report, code) = run_json(&["corpus", "--count", "3", "--seed", "11"]);
    assert_eq!(code, 0);
    assert_eq!(report["input_digest"], Value::Null);
    assert_eq!(report["algebra"], Value::Null);
    assert_eq!(report["results"]["algebras"], 3);
    assert_eq!(report["results"]["violations"], 0);
}

#[test]
fn corpus_check_all_is_clean_on_fifty_default_algebras() {
    let (report, code) = run_json(&["corpus", "--check", "all"]);
    assert_eq!(code, 0);
    let results = &report["results"];
    assert_eq!(results["algebras"], 50);
    assert_eq!(results["violations"], 0);
    assert!(
        results["witness_bearing"].as_u64().unwrap() >= 1,
        "the default corpus contains witness-bearing algebras"
    );
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let path = example("cycle2.quiver");
    let (mut first, _) = run_json(&["hh", path.to_str().unwrap()]);
    let (mut second, _) = run_json(&["hh", path.to_str().unwrap()]);
    first.as_object_mut().unwrap().remove("timing_ms");
    second.as_object_mut().unwrap().remove("timing_ms");
    assert_eq!(first, second);
}

#[test]
fn output_flag_writes_the_report_file() {
    let dir = std::env::temp_dir();
    let out_path = dir.join(format!("quiver-hh-cli-out-{}.json", std::process::id()));
    let path = example("dual.quiver");
    let out = run(&[
        "validate",
        path.to_str().unwrap(),
        "--format",
        "json",
        "--output",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let report: Value = serde_json::from_slice(&std::fs::read(&out_path).unwrap()).unwrap();
    std::fs::remove_file(&out_path).ok();
    assert_eq!(report["results"]["dim"], 2);
}

#[test]
fn text_format_prints_header_and_results() {
    let path = example("linear_ab.quiver");
    let out = run(&["pd", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("quiver-hh"));
    assert!(text.contains("input digest:"));
    assert!(text.contains("route"));
}

#[test]
fn comments_do_not_change_the_digest() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("quiver-hh-cli-digest-{}.quiver", std::process::id()));
    let original = std::fs::read_to_string(example("dual.quiver")).unwrap();
    std::fs::write(&path, format!("# extra leading comment\n\n{original}# trailing\n")).unwrap();
    let (with_comments, _) = run_json(&["validate", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    let (plain, _) = run_json(&["validate", example("dual.quiver").to_str().unwrap()]);
    assert_eq!(with_comments["input_digest"], plain["input_digest"]);
}
