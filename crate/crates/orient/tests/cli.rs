//! End-to-end tests of the `orient` binary: output formats, the exit-code
//! contract, and the budget environment variable.

use std::process::{Command, Output};

fn orient(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orient"))
        .env_remove("ORIENT_BUDGET")
        .args(args)
        .output()
        .unwrap()
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

fn json(output: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(output)).unwrap()
}

#[test]
fn classify_plain_line() {
    let out = orient(&["classify", "0,1,0,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).trim(),
        "orientation=none rank=2 cyclic_descents=2 cyclic_ascents=2 determined_by_triples=false"
    );
}

#[test]
fn classify_empty_sequence() {
    let out = orient(&["classify", ""]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).trim(),
        "orientation=both rank=0 cyclic_descents=0 cyclic_ascents=0"
    );
}

#[test]
fn classify_parse_error_names_the_token() {
    let out = orient(&["classify", "0,1,x"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).is_empty());
    let message = stderr(&out);
    assert!(message.contains("position 3"), "stderr: {message}");
    assert!(message.contains('x'), "stderr: {message}");
}

#[test]
fn classify_json_envelope() {
    let out = orient(&["classify", "0,1,0,1", "--format", "json"]);
    let value = json(&out);
    assert_eq!(value["command"], "classify");
    assert_eq!(value["result"]["orientation"], "none");
    assert_eq!(value["result"]["sequence"], serde_json::json!([0, 1, 0, 1]));
    assert!(value["version"].is_string());
    assert!(value["config"].is_object());
}

#[test]
fn classify_csv_row() {
    let out = orient(&["classify", "0,1,0,1", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "sequence,orientation,rank,cyclic_descents,cyclic_ascents,determined_by_triples"
    );
    assert_eq!(lines.next().unwrap(), "\"0,1,0,1\",none,2,2,2,false");
}

#[test]
fn classify_map_examples() {
    let out = orient(&["classify-map", "1,2,3,0"]);
    assert!(stdout(&out).contains("orientation_preserving=true"));

    let out = orient(&["classify-map", "0,1,0,1"]);
    let line = stdout(&out);
    assert!(line.contains("orientation_preserving=false"));
    assert!(line.contains("orientation_reversing=false"));

    // image value outside the chain
    let out = orient(&["classify-map", "0,9"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn enumerate_tiny_chains() {
    let out = orient(&["enumerate", "1"]);
    assert!(stdout(&out).contains("n=1 total=1 none=0 cyclic=0 anticyclic=0 both=1"));

    let out = orient(&["enumerate", "2"]);
    assert!(stdout(&out).contains("n=2 total=4 none=0 cyclic=0 anticyclic=0 both=4"));
}

#[test]
fn enumerate_census_is_self_consistent() {
    let out = orient(&["enumerate", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let value = json(&out);
    let counts = &value["result"]["counts"];
    let total: u64 = ["none", "cyclic", "anticyclic", "both"]
        .iter()
        .map(|k| counts[*k].as_u64().unwrap())
        .sum();
    assert_eq!(total, 256);
    assert_eq!(value["result"]["total"], 256);
    assert!(counts["none"].as_u64().unwrap() >= 1);
}

#[test]
fn budget_env_var_applies_and_flag_wins() {
    let out = Command::new(env!("CARGO_BIN_EXE_orient"))
        .env("ORIENT_BUDGET", "10")
        .args(["enumerate", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("256"), "stderr: {}", stderr(&out));

    let out = Command::new(env!("CARGO_BIN_EXE_orient"))
        .env("ORIENT_BUDGET", "10")
        .args(["enumerate", "4", "--budget", "300"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = Command::new(env!("CARGO_BIN_EXE_orient"))
        .env("ORIENT_BUDGET", "many")
        .args(["enumerate", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_exit_codes() {
    let out = orient(&["verify", "6", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("violations=0"));

    // below the minimum length for triples
    let out = orient(&["verify", "2", "2"]);
    assert_eq!(out.status.code(), Some(1));

    let out = orient(&["verify", "6", "4", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("5440"), "stderr: {}", stderr(&out));
}

#[test]
fn verify_json_lists_the_square_counterexample() {
    let out = orient(&["verify", "4", "2", "--format", "json"]);
    let value = json(&out);
    assert_eq!(value["result"]["violations"], serde_json::json!([]));
    let cex = value["result"]["counterexamples"].as_array().unwrap();
    assert!(cex.contains(&serde_json::json!([0, 1, 0, 1])));
}

#[test]
fn counterexamples_output() {
    let out = orient(&["counterexamples", "4", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("0,1,0,1 predicted=both actual=none"),
        "output: {text}"
    );

    let out = orient(&["counterexamples", "3", "5"]);
    assert!(stdout(&out).contains("found=0"));

    let out = orient(&["counterexamples", "4", "1"]);
    assert!(stdout(&out).contains("found=0"));
}

#[test]
fn closure_check_output() {
    let out = orient(&["closure-check", "1", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "checked=1 violations=0");

    let out = orient(&["closure-check", "5", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "kind,sequence");
}

#[test]
fn help_and_usage_errors() {
    let out = orient(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("usage: orient"));

    let out = orient(&[]);
    assert_eq!(out.status.code(), Some(1));

    let out = orient(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("unknown command"));
}

#[test]
fn identical_invocations_give_identical_bytes() {
    let a = orient(&["verify", "5", "3", "--format", "json"]);
    let b = orient(&["verify", "5", "3", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);

    let a = orient(&["enumerate", "4", "--format", "csv", "--jobs", "1"]);
    let b = orient(&["enumerate", "4", "--format", "csv", "--jobs", "4"]);
    assert_eq!(a.stdout, b.stdout);
}
