use std::time::Duration;

use qcatalan::report::{render_report, Format, RenderOptions, ReportRecord};
use qcatalan::verifier::{CheckResult, Params, Status, Witness};

fn record(id: &str, params: &str, status: Status, witness: Option<&str>, ms: u64) -> ReportRecord {
    let result = CheckResult {
        check_id: id.to_string(),
        params: params.parse::<Params>().unwrap(),
        status,
        witness: witness.map(|w| Witness::from_tagged(w).unwrap()),
        detail: None,
        elapsed: Duration::from_millis(ms),
    };
    ReportRecord::new(result, "2026-01-01T00:00:00Z")
}

fn mixed() -> Vec<ReportRecord> {
    vec![
        record("recover", "n=2", Status::Holds, Some("rational:9"), 3),
        record("bnk-power", "n=3;a=1;r=0;j=7", Status::Fails, Some("laurent:q^-4*(1 + q^2 - 2*q^5)"), 12),
        record("identity-one", "n=3;m=0;assign=0", Status::DomainSkip, None, 0),
    ]
}

#[test]
fn markdown_matches_golden_file() {
    let out = render_report(&mixed(), Format::Md, RenderOptions::default());
    assert_eq!(out, include_str!("golden/mixed.md"));
}

#[test]
fn csv_rows_follow_header() {
    let out = render_report(&mixed(), Format::Csv, RenderOptions { timing: false });
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "check_id,params,status,witness,elapsed_ms");
    assert_eq!(lines[1], "recover,n=2,Holds,9,");
    assert_eq!(lines[3], "identity-one,n=3;m=0;assign=0,DomainSkip,,");
}

#[test]
fn json_is_an_array_in_input_order() {
    let out = render_report(&mixed(), Format::Json, RenderOptions::default());
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let statuses: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["status"].as_str().unwrap()).collect();
    assert_eq!(statuses, ["Holds", "Fails", "DomainSkip"]);
    assert_eq!(v[1]["elapsed_ms"], 12);
    assert_eq!(v[0]["tool_version"], qcatalan::VERSION);
}
