use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn nakayama(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nakayama"))
        .args(args)
        .env_remove("NAKAYAMA_OUT_DIR")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

fn verdict_lines(path: &Path) -> Vec<String> {
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .filter(|l| l.contains("\"check\""))
        .map(str::to_owned)
        .collect()
}

#[test]
fn validate_accepts_and_rejects() {
    let ok = nakayama(&["validate", "--series", "cyclic:2,3"]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = nakayama(&["validate", "--series", "4,2"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("index 1"));
}

#[test]
fn invalid_module_is_an_input_error() {
    let out = nakayama(&["hom", "--series", "2,3", "--from", "0,5", "--to", "0,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn module_report() {
    let out = nakayama(&["module", "--series", "cyclic:2,3", "--m", "1,2"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["outputs"]["syzygy"], "1,1");
    assert_eq!(v["outputs"]["pd"], 2);
    assert_eq!(v["outputs"]["dual"], "0,2");
}

#[test]
fn kx3_example() {
    let out = nakayama(&["paper", "--example", "2.2"]);
    assert!(out.status.success());
    let w = &json(&out)["outputs"]["witness"];
    assert_eq!(w["ext_2"], 1);
    assert_eq!(w["hom_syzygy_2"], 2);
    assert_eq!(w["ext_2_oracle"], 1);
}

#[test]
fn ext_with_oracle_agrees() {
    let out = nakayama(&[
        "ext", "--series", "cyclic:2,3", "--from", "0,1", "--to", "0,1", "--max-degree", "4",
        "--oracle",
    ]);
    assert!(out.status.success());
    let o = &json(&out)["outputs"];
    assert_eq!(o["dims"], serde_json::json!([1, 0, 1, 0, 0]));
    assert_eq!(o["agree"], true);
}

#[test]
fn check_replays_a_verdict() {
    let out = nakayama(&["check", "--series", "cyclic:2,3", "--id", "loewy_bounds"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["status"], "holds");
    let replay = v["replay"].as_str().unwrap().to_owned();
    let args: Vec<&str> = replay.split_whitespace().skip(1).collect();
    let again = json(&nakayama(&args));
    assert_eq!(again["status"], v["status"]);
    assert_eq!(again["witness"], v["witness"]);
}

#[test]
fn survey_output_is_independent_of_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let mut runs = Vec::new();
    for jobs in ["1", "6"] {
        let path = dir.path().join(format!("s{jobs}.jsonl"));
        let out = nakayama(&[
            "survey", "--kind", "cyclic", "--n", "1..3", "--max-loewy", "7", "--dedupe", "--jobs",
            jobs, "--out", path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        runs.push(verdict_lines(&path));
    }
    assert!(!runs[0].is_empty());
    assert_eq!(runs[0], runs[1]);
}

#[test]
fn survey_resume_appends_the_remainder() {
    let dir = tempfile::tempdir().unwrap();
    let full = dir.path().join("full.jsonl");
    let split = dir.path().join("split.jsonl");
    let base = ["survey", "--kind", "linear", "--n", "2..4", "--max-loewy", "4", "--checks",
        "nonrigidity_criterion,loewy_bounds"];
    let run = |extra: &[&str]| {
        let mut args = base.to_vec();
        args.extend_from_slice(extra);
        assert_eq!(nakayama(&args).status.code(), Some(0));
    };
    run(&["--out", full.to_str().unwrap()]);
    let all = verdict_lines(&full);
    let algebras: Vec<Value> = all.iter().map(|l| serde_json::from_str::<Value>(l).unwrap()).collect();
    let first_three: std::collections::BTreeSet<_> =
        algebras.iter().map(|v| v["algebra"].to_string()).take(6).collect();
    assert_eq!(first_three.len(), 3);

    std::fs::write(&split, all[..6].join("\n") + "\n").unwrap();
    run(&["--out", split.to_str().unwrap(), "--resume-from", "3"]);
    assert_eq!(verdict_lines(&split), all);
}

#[test]
fn survey_tsv_format() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.tsv");
    let out = nakayama(&[
        "survey", "--kind", "cyclic", "--n", "2..2", "--max-loewy", "4", "--format", "tsv",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("algebra\tcheck\tstatus\tdetail"));
    let row: Vec<&str> = lines.next().unwrap().split('\t').collect();
    assert_eq!(row.len(), 4);
    assert!(["holds", "skipped"].contains(&row[2]));
    assert!(text.lines().last().unwrap().starts_with("# {"));
}

#[test]
fn survey_rejects_unknown_check() {
    let out = nakayama(&["survey", "--n", "1..2", "--max-loewy", "4", "--checks", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}
