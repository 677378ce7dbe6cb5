use std::path::Path;
use std::process::Command;

use proptest::prelude::*;
use qcatalan::Status;
use qcatalan_cli::{exit_code_for, run_cli_with, CACHE_ENV, EXIT_FAIL, EXIT_OK, EXIT_USAGE};

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("qcatalan").chain(args.iter().copied());
    let code = run_cli_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_reports_the_common_value() {
    let (code, out, _) = run(&["verify", "recover", "--n", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("Holds") && out.contains("witness 9"), "{out}");
}

#[test]
fn verify_identity_one_defaults_to_r_equals_m() {
    let (code, out, _) = run(&["verify", "identity-one", "--n", "2", "--m", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("assign=0") && out.contains("witness 4"), "{out}");
    let (code, out, _) = run(&["verify", "identity-one", "--n", "2", "--m", "1", "--assignment", "r=n"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("assign=1"), "{out}");
}

#[test]
fn verify_prints_laurent_quotients() {
    let (code, out, _) = run(&["verify", "ank-power", "--n", "2", "--a", "1", "--r", "0", "--j", "0"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.trim_end().ends_with("witness 1"), "{out}");
    let (code, out, _) = run(&["verify", "s-r-multi", "--a", "1", "--ns", "2", "--r", "0", "--j", "-1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("q^-6*(1 - q + q^3)"), "{out}");
}

#[test]
fn verify_json_has_the_fixed_key_order() {
    let (code, out, _) = run(&["verify", "new-identity", "--m", "2", "--n", "2", "--format", "json", "--no-timing"]);
    assert_eq!(code, EXIT_OK);
    let keys = ["check_id", "params", "status", "witness", "detail", "elapsed_ms", "tool_version", "timestamp"];
    let positions: Vec<usize> = keys.iter().map(|k| out.find(&format!("\"{k}\"")).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{out}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "no-such-check"][..],
        &["verify", "recover"],
        &["verify", "recover", "--n", "x"],
        &["verify", "recover", "--n", "2", "--m", "3"],
        &["sweep", "recover", "--grid", "n=1.."],
        &["sweep", "recover", "--grid", "m=1..3"],
        &["frobnicate"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
}

#[test]
fn domain_refusals_are_not_failures() {
    let (code, out, _) = run(&["verify", "identity-one", "--n", "0", "--m", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("DomainSkip"), "{out}");
}

#[test]
fn list_names_every_check() {
    let (code, out, _) = run(&["list"]);
    assert_eq!(code, EXIT_OK);
    for def in qcatalan::verifier::CHECKS {
        assert!(out.contains(def.id), "{}", def.id);
    }
    assert!(out.contains("conj1") && out.contains("conj2"));
}

#[test]
fn sweep_then_report_round_trips_through_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    let (code, out, _) = run(&["sweep", "q1-cnk", "--grid", "n=2..6,a=1..n-1,r=0..1", "--cache", s(&cache)]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 30);
    let csv = dir.path().join("r.csv");
    let (code, _, _) = run(&["report", "--format", "csv", "--out", s(&csv), "--cache", s(&cache)]);
    assert_eq!(code, EXIT_OK);
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("check_id,params,status,witness,elapsed_ms\n"));
    assert_eq!(text.lines().count(), 31);
}

#[test]
fn report_over_a_failing_entry_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    let mut bad = qcatalan::verifier::run_check("recover", &"n=4".parse().unwrap()).unwrap();
    bad.status = Status::Fails;
    let line = serde_json::to_string(&qcatalan::explorer::CacheEntry::from_result(&bad, false)).unwrap();
    std::fs::write(&cache, line + "\n").unwrap();
    let out = dir.path().join("r.md");
    let (code, _, _) = run(&["report", "--format", "md", "--out", s(&out), "--cache", s(&cache)]);
    assert_eq!(code, EXIT_FAIL);
    assert!(std::fs::read_to_string(&out).unwrap().contains("Fails"));
}

#[test]
fn report_without_a_cache_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.md");
    let status = Command::new(env!("CARGO_BIN_EXE_qcatalan"))
        .args(["report", "--format", "md", "--out", s(&out)])
        .env_remove(CACHE_ENV)
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_USAGE));
}

#[test]
fn cache_path_falls_back_to_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("env.jsonl");
    let bin = env!("CARGO_BIN_EXE_qcatalan");
    let sweep = Command::new(bin)
        .args(["sweep", "recover", "--grid", "n=1..5"])
        .env(CACHE_ENV, &cache)
        .output()
        .unwrap();
    assert_eq!(sweep.status.code(), Some(EXIT_OK));
    assert_eq!(std::fs::read_to_string(&cache).unwrap().lines().count(), 5);
    let out = dir.path().join("r.json");
    let report = Command::new(bin)
        .args(["report", "--format", "json", "--out", s(&out)])
        .env(CACHE_ENV, &cache)
        .output()
        .unwrap();
    assert_eq!(report.status.code(), Some(EXIT_OK));
    let parsed: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(parsed.as_array().unwrap().len(), 5);
}

#[test]
fn explore_text_reports_the_tally() {
    let (code, out, _) = run(&["explore", "conj1", "--grid", "n1=1..2,a=0..n1,r=0,j=0..1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.trim_end().ends_with("10 points, 0 against the conjecture"), "{out}");
}

fn status() -> impl Strategy<Value = Status> {
    prop_oneof![Just(Status::Holds), Just(Status::Fails), Just(Status::DomainSkip)]
}

proptest! {
    #[test]
    fn exit_code_is_one_exactly_when_something_fails(statuses in proptest::collection::vec(status(), 0..20)) {
        let expected = if statuses.contains(&Status::Fails) { EXIT_FAIL } else { EXIT_OK };
        prop_assert_eq!(exit_code_for(statuses), expected);
    }
}
