use std::process::{Command, Output};

use serde_json::Value;

fn fmcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fmcheck")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn flagged(v: &Value) -> Vec<String> {
    v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["status"] == "flagged-discrepancy")
        .map(|r| r["name"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn verify_all_is_deterministic() {
    let a = fmcheck(&["verify-all"]);
    let b = fmcheck(&["verify-all"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["summary"]["fail"], 0);
    for r in v["reports"].as_array().unwrap() {
        assert!(r["anchor"].as_str().is_some_and(|s| !s.is_empty()));
    }
}

#[test]
fn verify_lemma_flags_trivial_subgroup() {
    let v = json(&fmcheck(&["verify-lemma"]));
    assert_eq!(flagged(&v), vec!["lambda_invariant_subgroups", "fano_line_labels"]);
}

#[test]
fn kstar_model_is_flagged() {
    let out = fmcheck(&["emit-model", "--mu", "random:7", "--quotient", "Kstar"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(flagged(&v), vec!["display_kstar"]);
    assert_eq!(v["data"]["invariants"].as_array().unwrap().len(), 13);
    assert_eq!(v["data"]["relations"].as_array().unwrap().len(), 35);
    let k = json(&fmcheck(&["emit-model", "--mu", "random:7", "--quotient", "K"]));
    assert!(flagged(&k).is_empty());
}

#[test]
fn j_report_repeats_one_value() {
    let v = json(&fmcheck(&["j-report", "--mu", "mu0"]));
    let curves = v["data"]["curves"].as_object().unwrap();
    let t: Vec<&Value> = curves.iter().filter(|(k, _)| k.starts_with('T')).map(|(_, c)| &c["j"]).collect();
    assert_eq!(t.len(), 7);
    assert!(t.iter().all(|j| *j == t[0]));
}

#[test]
fn equiv_finds_witness() {
    let v = json(&fmcheck(&["equiv", "--mu", "[2,3,4,5]", "--mu-prime", "[3,2,4,5]"]));
    assert_ne!(v["data"]["result"], "inequivalent");
    let v = json(&fmcheck(&["equiv", "--mu", "mu0", "--mu-prime", "[2,3,4,5]"]));
    assert_eq!(v["data"]["result"], "inequivalent");
}

#[test]
fn exit_codes() {
    assert_eq!(fmcheck(&["verify-smooth", "--mu", "[2,3"]).status.code(), Some(3));
    assert_eq!(fmcheck(&["verify-smooth", "--mu", "[0,3,4,5]"]).status.code(), Some(4));
    assert_eq!(fmcheck(&["verify-smooth", "--nope"]).status.code(), Some(2));
    assert_eq!(fmcheck(&["verify-smooth", "--mu", "random:1"]).status.code(), Some(0));
}

#[test]
fn text_format() {
    let out = fmcheck(&["--format", "text", "genus-report"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("rotation quotient (0; 2, 7, 7)"));
    assert!(s.lines().any(|l| l.starts_with("H ") && l.contains("64")));
}
