//! Rendering of results as json, csv or a markdown table.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::verifier::CheckResult;

/// A result stamped with the tool version and an ISO-8601 timestamp.
#[derive(Clone, Debug)]
pub struct ReportRecord {
    pub result: CheckResult,
    pub tool_version: String,
    pub timestamp: String,
}

impl ReportRecord {
    pub fn new(result: CheckResult, timestamp: impl Into<String>) -> Self {
        Self { result, tool_version: crate::VERSION.to_string(), timestamp: timestamp.into() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Md,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" => Ok(Format::Md),
            other => Err(Error::Parse(format!("unknown report format {other:?}"))),
        }
    }
}

/// With `timing` off, `elapsed_ms` and `timestamp` are left blank so that
/// reports of identical results are byte-identical.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RenderOptions {
    pub timing: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self { timing: true }
    }
}

#[derive(Serialize)]
struct JsonRow<'a> {
    check_id: &'a str,
    params: String,
    status: String,
    witness: Option<String>,
    detail: Option<&'a str>,
    elapsed_ms: Option<u128>,
    tool_version: &'a str,
    timestamp: Option<&'a str>,
}

fn elapsed_ms(r: &ReportRecord, opts: RenderOptions) -> Option<u128> {
    opts.timing.then(|| r.result.elapsed.as_millis())
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn md_cell(s: &str) -> String {
    s.replace('|', "\\|")
}

pub fn render_report(records: &[ReportRecord], format: Format, opts: RenderOptions) -> String {
    match format {
        Format::Json => {
            let rows: Vec<JsonRow> = records
                .iter()
                .map(|r| JsonRow {
                    check_id: &r.result.check_id,
                    params: r.result.params.to_string(),
                    status: r.result.status.to_string(),
                    witness: r.result.witness.as_ref().map(ToString::to_string),
                    detail: r.result.detail.as_deref(),
                    elapsed_ms: elapsed_ms(r, opts),
                    tool_version: &r.tool_version,
                    timestamp: opts.timing.then_some(r.timestamp.as_str()),
                })
                .collect();
            let mut out = serde_json::to_string_pretty(&rows).expect("report rows serialize");
            out.push('\n');
            out
        }
        Format::Csv => {
            let mut out = String::from("check_id,params,status,witness,elapsed_ms\n");
            for r in records {
                let witness = r.result.witness.as_ref().map(ToString::to_string).unwrap_or_default();
                let elapsed = elapsed_ms(r, opts).map(|e| e.to_string()).unwrap_or_default();
                let cells =
                    [r.result.check_id.clone(), r.result.params.to_string(), r.result.status.to_string(), witness, elapsed];
                let line: Vec<String> = cells.iter().map(|c| csv_field(c)).collect();
                writeln!(out, "{}", line.join(",")).expect("write to string");
            }
            out
        }
        Format::Md => {
            let mut out = String::from("| check_id | params | status | witness | elapsed_ms |\n");
            out.push_str("|---|---|---|---|---|\n");
            for r in records {
                let witness = r.result.witness.as_ref().map(|w| format!("`{w}`")).unwrap_or_default();
                let elapsed = elapsed_ms(r, opts).map(|e| e.to_string()).unwrap_or_default();
                writeln!(
                    out,
                    "| {} | {} | {} | {} | {} |",
                    md_cell(&r.result.check_id),
                    md_cell(&r.result.params.to_string()),
                    r.result.status,
                    md_cell(&witness),
                    elapsed
                )
                .expect("write to string");
            }
            out
        }
    }
}
