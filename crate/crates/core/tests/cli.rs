use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_hugheslab"));
    c.env_remove("HUGHESLAB_CAP");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    stdout(out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hugheslab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn analyze_s3() {
    let out = run(&["analyze", "builtin:S3", "--pi", "ALL"]);
    assert_eq!(code(&out), 0);
    let r = &json_lines(&out)[0];
    assert_eq!(r["case"], "TRIVIAL");
    assert_eq!(r["h_pi_order"], 1);
    assert_eq!(r["hughes"][0]["p"], 2);
    assert_eq!(r["hughes"][0]["order"], 3);
    assert_eq!(r["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn analyze_c6_is_full() {
    let out = run(&["analyze", "C6"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_lines(&out)[0]["case"], "FULL");
}

#[test]
fn analyze_gamma_with_three_and_thirteen() {
    // Gamma has elements of order 9, so H_{3,13}(Gamma) is everything.
    let out = run(&["analyze", "builtin:gamma", "--pi", "3,13"]);
    assert_eq!(code(&out), 0);
    let r = &json_lines(&out)[0];
    assert_eq!(r["order"], 1053);
    assert_eq!(r["case"], "FULL");
    assert_eq!(r["h_pi_order"], 1053);
    assert_eq!(r["hughes"][0]["order"], 1053);
}

#[test]
fn analyze_inline_record_and_table() {
    let rec = r#"{"name":"D8","degree":4,"generators":[[1,2,3,0],[0,3,2,1]]}"#;
    let out = run(&["analyze", rec, "--table"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.lines().next().unwrap().starts_with("name"));
    assert!(text.contains("EQUALS_SOME_HP"));
}

#[test]
fn analyze_bad_input_is_usage_error() {
    assert_eq!(code(&run(&["analyze", "builtin:nope"])), 2);
    assert_eq!(code(&run(&["analyze", "S3", "--pi", "4,6"])), 2);
    let bad = r#"{"name":"x","degree":3,"generators":[[0,0,1]]}"#;
    assert_eq!(code(&run(&["analyze", bad])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&[])), 2);
}

#[test]
fn cap_from_flag_and_environment() {
    let out = run(&["--cap", "5", "analyze", "S3"]);
    assert_eq!(code(&out), 1);
    let out = bin()
        .args(["analyze", "S4"])
        .env("HUGHESLAB_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(code(&out), 1);
    let out = bin()
        .args(["analyze", "S4"])
        .env("HUGHESLAB_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
}

#[test]
fn scan_empty_catalog() {
    let path = temp("empty.jsonl", "");
    let out = run(&["scan", "--catalog", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["summary"]["reports"], 0);
}

#[test]
fn scan_reports_bad_lines_and_continues() {
    let path = temp(
        "bad.jsonl",
        concat!(
            r#"{"name":"bad","degree":3,"generators":[[0,0,1]]}"#,
            "\n",
            r#"{"name":"S3","degree":3,"generators":[[1,0,2],[1,2,0]]}"#,
            "\n"
        ),
    );
    let out = run(&["scan", "--catalog", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["line"], 1);
    assert!(lines[0]["error"].as_str().unwrap().contains("bijection"));
    assert_eq!(lines[1]["name"], "S3");
    assert_eq!(lines[2]["summary"]["errors"], 1);
    assert_eq!(lines[2]["summary"]["reports"], 1);
}

#[test]
fn scan_builtin_catalog_is_clean_and_deterministic() {
    let first = run(&["scan"]);
    let second = run(&["scan"]);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    let lines = json_lines(&first);
    let summary = &lines.last().unwrap()["summary"];
    assert!(summary["reports"].as_u64().unwrap() >= 40);
    assert_eq!(summary["violations"], 0);
    assert_eq!(summary["exceptional"], 0);
    assert_eq!(lines[0]["name"], "C1");
}

#[test]
fn construct_then_scan_with_max_order() {
    let out = run(&["construct", "S3", "A5", "D8"]);
    assert_eq!(code(&out), 0);
    let path = temp("three.jsonl", &stdout(&out));
    let out = run(&[
        "scan",
        "--catalog",
        path.to_str().unwrap(),
        "--max-order",
        "10",
    ]);
    assert_eq!(code(&out), 0);
    let lines = json_lines(&out);
    assert_eq!(lines[1]["name"], "A5");
    assert_eq!(lines[1]["skipped"], 60);
    assert_eq!(lines[3]["summary"]["skipped"], 1);

    let out = run(&["analyze", "D8", "--catalog", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_lines(&out)[0]["order"], 8);
}

#[test]
fn construct_family() {
    let out = run(&["construct", "--family", "extraspecial", "3", "9"]);
    assert_eq!(code(&out), 0);
    let rec = &json_lines(&out)[0];
    assert_eq!(rec["name"], "extraspecial-3-9");
    assert_eq!(rec["degree"], 27);
    assert_eq!(code(&run(&["construct", "--family", "dihedral", "x"])), 2);
    assert_eq!(code(&run(&["construct", "nope"])), 2);
}

#[test]
fn out_flag_writes_file() {
    let path = temp("out.jsonl", "");
    let out = run(&["--out", path.to_str().unwrap(), "construct", "C4"]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with(r#"{"name":"C4""#));
}

#[test]
fn hunt_small_bound_rejects_everything() {
    let out = run(&["hunt", "--max-order", "1000"]);
    assert_eq!(code(&out), 0);
    let lines = json_lines(&out);
    let summary = &lines.last().unwrap()["summary"];
    assert_eq!(summary["pairs"], 30);
    assert_eq!(summary["rejected"], 30);
    assert_eq!(
        summary["statement"],
        "no candidate below bound, every pair rejected with citations"
    );
    assert!(lines[..lines.len() - 1]
        .iter()
        .all(|v| v["rejected"] == true));
}

#[test]
fn hunt_default_survivors() {
    let out = run(&["hunt"]);
    let lines = json_lines(&out);
    let survivors = &lines.last().unwrap()["summary"]["survivors"];
    assert_eq!(survivors.as_array().unwrap().len(), 2);
    assert_eq!(survivors[0]["p"], 7);
    assert_eq!(survivors[0]["minimal_kernel_order"], 15625);
    assert_eq!(code(&run(&["hunt", "--max-order", "0"])), 2);
}
