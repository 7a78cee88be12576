use std::process::{Command, Output};

use serde_json::Value;

fn dectab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dectab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn insert_prints_the_worked_example() {
    let out = dectab(&[
        "insert",
        "--word",
        "4' 4 3 3 2' 3' 3 2' 1'",
        "--format",
        "json",
        "--quiet",
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        v["P"]["rows"][0],
        serde_json::json!(["4", "3", "3", "3", "4"])
    );
    assert_eq!(v["P"]["rows"][2], serde_json::json!(["1'"]));
    assert_eq!(v["Q"]["rows"][1], serde_json::json!(["4", "5'", "9'"]));
    assert!(v.get("trace").is_none());

    let out = dectab(&["insert", "--word", "2 1"]);
    let text = stdout(&out);
    assert!(text.contains("P =") && text.contains("trace:"));
}

#[test]
fn graph_dot_is_deterministic() {
    let args = [
        "graph", "--flavor", "qplus", "--n", "3", "--shape", "2,1", "--format", "dot",
    ];
    let a = dectab(&args);
    let b = dectab(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("digraph crystal {"));
    assert!(text.contains("color=blue"));
}

#[test]
fn graph_writes_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let out = dectab(&[
        "graph",
        "--n",
        "2",
        "--word",
        "1 2",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 8);
}

#[test]
fn enumerate_and_character() {
    let out = dectab(&[
        "enumerate",
        "--family",
        "dectab+",
        "--shape",
        "1",
        "--n",
        "2",
    ]);
    assert_eq!(stdout(&out).lines().count(), 4);

    let out = dectab(&["character", "--schur-q", "1", "--n", "2"]);
    assert_eq!(stdout(&out).trim(), "2*x1 + 2*x2");

    let out = dectab(&["character", "--shape", "2,1", "--n", "3", "--expand"]);
    assert_eq!(stdout(&out).trim(), "Q(2,1)");

    let out = dectab(&[
        "character",
        "--tensor",
        "2",
        "--n",
        "2",
        "--expand",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v, serde_json::json!([{"shape": [2], "coef": 2}]));
}

#[test]
fn classes_partition_the_words() {
    let out = dectab(&["classes", "--length", "2", "--n", "2", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let total: usize = v
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["words"].as_array().unwrap().len())
        .sum();
    assert_eq!(total, 16);
}

#[test]
fn check_suites_report_and_exit() {
    let out = dectab(&["check", "--suite", "all", "--n", "3", "--max-len", "4"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]")).count(), 11);

    let out = dectab(&["check", "--suite", "golden-insertion", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["passed"], Value::Bool(true));
}

#[test]
fn usage_errors_exit_two_with_json() {
    for args in [
        vec!["check", "--suite", "bogus"],
        vec!["insert", "--word", "x"],
        vec!["graph", "--flavor", "q", "--n", "1", "--shape", "1"],
        vec!["graph", "--shape", "2,2"],
        vec!["frobnicate"],
    ] {
        let out = dectab(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err: Value =
            serde_json::from_str(String::from_utf8(out.stderr).unwrap().trim()).unwrap();
        assert_eq!(err["error"], "usage");
    }
}
