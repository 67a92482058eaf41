use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apolar-lab")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = run(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn hilbert_line() {
    let out = run(&["hilbert", "y1^3+y2^2+y3^2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "H = (1, 3, 1, 1); dim = 6; sdeg = 3; cdeg = 1\n");
}

#[test]
fn report_schema_and_fields() {
    let v = json(&["hilbert", "y1^3+y2^2+y3^2"]);
    assert_eq!(v["schema"], "apolar-lab/1");
    assert_eq!(v["hilbert"], serde_json::json!([1, 3, 1, 1]));
    assert_eq!(v["dim"], 6);
    assert!(v.get("timing_ms").is_none());
}

#[test]
fn rationals_are_fraction_strings() {
    let v = json(&["poincare", "y1^2+y2^2"]);
    let p = &v["poincare"];
    assert_eq!(p["closed_form"]["numerator"], serde_json::json!(["1/1"]));
    assert_eq!(p["closed_form"]["denominator"], serde_json::json!(["1/1", "-2/1", "1/1"]));
    assert_eq!(p["consistent"], true);
    assert_eq!(v["betti"]["values"][6], "7");
}

#[test]
fn annihilator_generators() {
    let v = json(&["ann", "y1^2+y2^2"]);
    let gens: Vec<&str> = v["annihilator"].as_array().unwrap().iter().map(|g| g.as_str().unwrap()).collect();
    assert_eq!(gens.len(), 2);
    assert!(gens.contains(&"x1*x2"));
}

#[test]
fn classify_from_hilbert() {
    let v = json(&["classify", "--hilbert", "1,2,1"]);
    assert_eq!(v["verdicts"]["stretched"], true);
    assert_eq!(v["verdicts"]["any"], true);
}

#[test]
fn input_errors_exit_2() {
    for args in [
        &["hilbert", "y1^"][..],
        &["hilbert", "0"],
        &["classify", "--hilbert", "1,2,4"],
        &["classify"],
        &["split", "--g", "y1^3"],
        &["split", "--g", "y1^3", "--h", "y1^2"],
        &["enumerate", "--sdeg", "2"],
        &["verify", "--suite", "nope"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
}

#[test]
fn suite_names_and_aliases() {
    let a = json(&["--seed", "5", "verify", "--suite", "lemma31", "--trials", "3"]);
    let b = json(&["--seed", "5", "verify", "--suite", "split-sum", "--trials", "3"]);
    assert_eq!(a["suite"], b["suite"]);
    assert_eq!(a["suite"]["passed"], 3);
}

#[test]
fn seeds_change_the_corpus() {
    let a = json(&["--seed", "1", "verify", "--suite", "macaulay-corr", "--trials", "4"]);
    let b = json(&["--seed", "2", "verify", "--suite", "macaulay-corr", "--trials", "4"]);
    assert_ne!(a["suite"]["results"], b["suite"]["results"]);
}

#[test]
fn timing_only_on_request() {
    let v = json(&["--timing", "hilbert", "y1^2"]);
    assert!(v["timing_ms"].is_u64());
    assert!(!v["command"].as_array().unwrap().iter().any(|a| a == "--timing"));
}

#[test]
fn split_certificate() {
    let v = json(&["split", "--g", "y1^3", "--n", "3"]);
    assert_eq!(v["split"]["holds"], true);
    assert_eq!(v["input"], "y1^3 + y2^2 + y3^2");
}
