use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn job(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/jobs").join(name)
}

fn hopfcyc(input: &Path, extra: &[&str]) -> (Output, Option<Value>) {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("report.json");
    let out = Command::new(env!("CARGO_BIN_EXE_hopfcyc"))
        .arg("--input")
        .arg(input)
        .arg("--json")
        .arg(&json)
        .args(extra)
        .output()
        .unwrap();
    let report = std::fs::read_to_string(&json).ok().map(|s| serde_json::from_str(&s).unwrap());
    (out, report)
}

fn inline_job(text: &str) -> (Output, Option<Value>) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("job.json");
    std::fs::write(&path, text).unwrap();
    hopfcyc(&path, &[])
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn h1_certification_job_passes() {
    let (out, report) = hopfcyc(&job("h1_certification.json"), &[]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let r = report.unwrap();
    assert_eq!(r["verdict"], "PASS");
    let tasks = r["tasks"].as_array().unwrap();
    assert_eq!(tasks.len(), 5);
    let labels: Vec<&str> = tasks[2..].iter().map(|t| t["label"].as_str().unwrap()).collect();
    assert_eq!(labels, ["delta_1", "delta_2'", "F"]);
    for t in &tasks[2..] {
        assert_eq!(t["data"]["b_residual"], "0");
        assert_eq!(t["data"]["lambda_residual"], "0");
    }
    assert!(stdout(&out).ends_with("PASS: 5 of 5 tasks pass\n"));
}

#[test]
fn corrupted_antipode_fails_with_a_witness() {
    let (out, report) = hopfcyc(&job("corrupted_antipode.json"), &[]);
    assert_eq!(out.status.code(), Some(1));
    let r = report.unwrap();
    let checks = r["tasks"][0]["checks"].as_array().unwrap();
    let failing: Vec<&Value> = checks.iter().filter(|c| c["pass"] == false).collect();
    assert_eq!(failing.len(), 1);
    assert_eq!(failing[0]["name"], "antipode identity");
    assert!(failing[0]["witness"].as_str().unwrap().starts_with("g:"));
}

#[test]
fn kz2_cohomology_reports_agreeing_dimensions() {
    let (out, report) = hopfcyc(&job("kz2_cohomology.json"), &[]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let data = &report.unwrap()["tasks"][2]["data"];
    assert_eq!(data["cyclic"], data["cyclic_bicomplex"]);
    assert_eq!(data["cyclic"].as_array().unwrap().len(), 4);
    assert_eq!(data["cyclic"], serde_json::json!([1, 0, 1, 0]));
}

#[test]
fn shipped_jobs_pass() {
    for name in ["kz2_families.json", "twisted_t2.json", "s3.json"] {
        let (out, _) = hopfcyc(&job(name), &[]);
        assert_eq!(out.status.code(), Some(0), "{name}\n{}", stdout(&out));
    }
}

#[test]
fn unknown_field_exits_2_with_position() {
    let (out, report) = inline_job("{\n  \"presentation\": {\"builtin\": \"ground\"},\n  \"taskz\": []\n}\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(report.is_none());
    let err = stderr(&out);
    assert!(err.contains(":3:"), "{err}");
    assert!(err.contains("taskz"), "{err}");
}

#[test]
fn bad_expressions_exit_2() {
    let (out, _) = inline_job(
        r#"{"presentation": {"builtin": "cm_h1"},
            "characters": {"d": {"Y": "1"}},
            "pairs": {"p": {"delta": "d"}},
            "tasks": [{"task": "certify-cocycle", "pair": "p", "level": 1, "candidate": "delta_1 + Z"}]}"#,
    );
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("tasks[0].candidate"), "{err}");
    assert!(err.contains("Z"), "{err}");
}

#[test]
fn q_requires_the_rational_function_field() {
    let text = std::fs::read_to_string(job("slq2.json")).unwrap().replace("\"rational-function\"", "\"rational\"");
    let (out, _) = inline_job(&text);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn engine_errors_are_reported_per_task() {
    let (out, report) = inline_job(
        r#"{"presentation": {"builtin": "cm_h1"},
            "algebras": {"H": {"from": "regular"}},
            "tasks": [{"task": "check-hopf", "exhaustive": false, "probes": {"random_monomials": 2}},
                      {"task": "verify-cocyclic", "instance": {"family": "plain", "algebra": "H"}, "levels": 1}]}"#,
    );
    assert_eq!(out.status.code(), Some(1));
    let r = report.unwrap();
    assert_eq!(r["tasks"][0]["verdict"], "PASS");
    assert_eq!(r["tasks"][1]["verdict"], "ERROR");
    assert!(r["tasks"][1]["error"].is_string());
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing");
    v
}

#[test]
fn reports_are_deterministic_given_a_seed() {
    let path = job("h1_certification.json");
    let (_, a) = hopfcyc(&path, &["--seed", "7"]);
    let (_, b) = hopfcyc(&path, &["--seed", "7"]);
    let (a, b) = (without_timing(a.unwrap()), without_timing(b.unwrap()));
    assert_eq!(serde_json::to_string_pretty(&a).unwrap(), serde_json::to_string_pretty(&b).unwrap());
    assert_eq!(a["seed"], 7);
}

#[test]
fn max_level_caps_levels() {
    let (out, report) = hopfcyc(&job("kz2_cohomology.json"), &["--max-level", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report.unwrap();
    assert_eq!(r["tasks"][1]["data"]["levels"], 1);
    assert_eq!(r["tasks"][2]["data"]["cyclic"].as_array().unwrap().len(), 2);
}

#[test]
fn lists_builtins() {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfcyc")).arg("--list-builtins").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for name in ["ground", "cm_h1", "slq2", "group_algebra", "function_algebra", "enveloping", "bicrossed"] {
        assert!(text.contains(name), "{name}");
    }
}
