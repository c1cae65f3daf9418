use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gogmagog"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().expect("stdin").write_all(stdin.as_bytes()).expect("write stdin");
    child.wait_with_output().expect("process output")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("json line")).collect()
}

#[test]
fn count_shapes() {
    let o = run(&["count", "--family", "gogam", "--n", "5"], "");
    assert!(o.status.success());
    assert_eq!(json_lines(&o)[0]["count"], 429);
    let o = run(&["count", "--family", "gogam", "--n", "6", "--k", "2", "--side", "left", "--format", "table"], "");
    assert_eq!(stdout(&o).trim(), "1594");
    let o = run(&["count", "--family", "gog", "--n", "5", "--k", "3", "--l", "3", "--m", "3", "--jobs", "3"], "");
    assert_eq!(json_lines(&o)[0]["count"], 149);
}

#[test]
fn enumerate_streams_rows() {
    let o = run(&["enumerate", "--family", "gog", "--n", "3"], "");
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 7);
    assert!(lines.iter().all(|v| v["n"] == 3 && v["rows"].as_array().unwrap().len() == 3));
}

#[test]
fn biject_round_trips() {
    let input = r#"{"n":3,"rows":[[2],[1,3],[1,2,3]]}"#;
    let o = run(&["biject", "--map", "std"], &format!("{input}\n"));
    let out = &json_lines(&o)[0];
    assert_eq!(out["admissible"], true);
    let y = serde_json::json!({"n": 3, "rows": out["rows"]}).to_string();
    let back = run(&["biject", "--map", "std", "--direction", "inv"], &format!("{y}\n"));
    assert_eq!(stdout(&back).trim(), input);

    let trap = r#"{"n":3,"k":1,"side":"left","rows":[[1],[1],[1]]}"#;
    let o = run(&["biject", "--map", "left1"], &format!("{trap}\n"));
    assert!(o.status.success());
    assert_eq!(json_lines(&o)[0]["rows"], serde_json::json!([[1], [1], [1]]));
}

#[test]
fn biject_reports_bad_lines() {
    let o = run(&["biject", "--map", "left2"], "not json\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(json_lines(&o)[0]["error"].is_string());
}

#[test]
fn zpoly_methods_agree() {
    let det = run(&["zpoly", "--n", "3"], "");
    assert_eq!(stdout(&det).trim(), "x^3 + 2x^2y + 2xy^2 + y^3 + xy");
    let a = run(&["zpoly", "--n", "4", "--format", "jsonl"], "");
    let b = run(&["zpoly", "--n", "4", "--method", "brute", "--format", "jsonl"], "");
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn stats_table() {
    let o = run(&["stats", "--family", "gog", "--n", "4", "--stat", "beta", "--format", "jsonl"], "");
    assert_eq!(json_lines(&o)[0]["total"], 42);
}

#[test]
fn verify_exit_codes() {
    let ok = run(&["verify", "--n-max", "2", "--format", "jsonl"], "");
    assert_eq!(ok.status.code(), Some(0));
    let report = &json_lines(&ok)[0];
    assert_eq!(report["suite"], "all");
    assert!(report["checks"].as_array().unwrap().iter().all(|c| c["status"] != "fail"));

    let failing = run(&["verify", "--suite", "statistics", "--n-max", "3"], "");
    assert_eq!(failing.status.code(), Some(1));
    assert!(stdout(&failing).contains("fail"));

    let capped = run(&["verify", "--n-max", "9"], "");
    assert_eq!(capped.status.code(), Some(2));
}

#[test]
fn undefined_shapes_are_rejected() {
    let o = run(&["count", "--family", "magog", "--n", "4", "--k", "2", "--side", "left"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}
