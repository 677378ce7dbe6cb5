//! The `qcatalan` command line.
//!
//! Exit codes: 0 when every point holds (domain skips included), 1 when any
//! point fails or a probe contradicts a proved range, 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

use qcatalan::explorer::{explore_grid, read_entries, sweep, Conjecture, ConjectureRecord, SweepSpec};
use qcatalan::report::{render_report, Format, RenderOptions, ReportRecord};
use qcatalan::verifier::{run_check, CheckResult, Params, Status, CHECKS};
use qcatalan::Error;

/// Environment variable overriding the cache path.
pub const CACHE_ENV: &str = "QCATALAN_CACHE";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qcatalan", version, about = "Exact checks of Catalan triangle identities and q-congruences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one check at one parameter point.
    Verify(VerifyArgs),
    /// Run a check over a grid such as "n=1..8,a=0..n,r=0..2,j=0..2r+1".
    Sweep(SweepArgs),
    /// Probe a multi-index ratio for arbitrary j.
    Explore(ExploreArgs),
    /// Render the results stored in a cache file.
    Report(ReportArgs),
    /// List the available checks.
    List,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
    Md,
}

impl OutputFormat {
    fn report(self) -> Option<Format> {
        match self {
            OutputFormat::Text => None,
            OutputFormat::Json => Some(Format::Json),
            OutputFormat::Csv => Some(Format::Csv),
            OutputFormat::Md => Some(Format::Md),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
    Md,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AssignArg {
    #[value(name = "r=m")]
    RIsM,
    #[value(name = "r=n")]
    RIsN,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Probe {
    Conj1,
    Conj2,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
    /// Write the output to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Leave timing fields blank in reports.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    check_id: String,
    #[arg(long, allow_negative_numbers = true)]
    n: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    m: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    a: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    r: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    j: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    s: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    k: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    n1: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    n2: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    n3: Option<i64>,
    /// Multi-index list n1,...,nm.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["n1", "n2", "n3"])]
    ns: Option<Vec<i64>>,
    #[arg(long, allow_negative_numbers = true)]
    m_max: Option<i64>,
    /// Which index bounds the sum in identity-one.
    #[arg(long, value_enum)]
    assignment: Option<AssignArg>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct SweepArgs {
    check_id: String,
    #[arg(long)]
    grid: String,
    /// Stop after this many points.
    #[arg(long)]
    budget: Option<usize>,
    /// Cache file; defaults to $QCATALAN_CACHE when set.
    #[arg(long)]
    cache: Option<PathBuf>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct ExploreArgs {
    #[arg(value_enum)]
    probe: Probe,
    /// Axes a, m, n1.., r and optionally j (default |j| <= 2m+2).
    #[arg(long)]
    grid: String,
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long)]
    cache: Option<PathBuf>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct ReportArgs {
    #[arg(long, value_enum)]
    format: ReportFormat,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    cache: Option<PathBuf>,
    #[arg(long)]
    no_timing: bool,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(e) => Failure::Runtime(e.to_string()),
            Error::InternalMismatch(m) => Failure::Runtime(m),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn now() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

fn verify_params(args: &VerifyArgs) -> Params {
    let mut p = Params::new();
    let scalar = [
        ("n", args.n),
        ("m", args.m),
        ("a", args.a),
        ("r", args.r),
        ("j", args.j),
        ("s", args.s),
        ("k", args.k),
        ("n1", args.n1),
        ("n2", args.n2),
        ("n3", args.n3),
        ("m_max", args.m_max),
    ];
    for (name, v) in scalar {
        if let Some(v) = v {
            p.set(name, v);
        }
    }
    if let Some(ns) = &args.ns {
        p.set("m", ns.len() as i64);
        for (i, n) in ns.iter().enumerate() {
            p.set(&format!("n{}", i + 1), *n);
        }
    }
    match args.assignment {
        Some(AssignArg::RIsM) => p.set("assign", 0),
        Some(AssignArg::RIsN) => p.set("assign", 1),
        None if args.check_id == "identity-one" => p.set("assign", 0),
        None => {}
    }
    p
}

fn text_line(r: &CheckResult) -> String {
    let mut line = format!("{} {}: {}", r.check_id, r.params, r.status);
    if let Some(w) = &r.witness {
        line.push_str(&format!("  witness {w}"));
    }
    if let Some(d) = &r.detail {
        line.push_str(&format!("  ({d})"));
    }
    line
}

fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => stdout.write_all(text.as_bytes()),
    }
}

fn render_results(results: &[CheckResult], output: &OutputArgs) -> String {
    match output.format.report() {
        None => results.iter().map(|r| text_line(r) + "\n").collect(),
        Some(format) => {
            let stamp = now();
            let records: Vec<ReportRecord> = results.iter().map(|r| ReportRecord::new(r.clone(), stamp.clone())).collect();
            render_report(&records, format, RenderOptions { timing: !output.no_timing })
        }
    }
}

/// 0 unless some point fails.
pub fn exit_code_for(statuses: impl IntoIterator<Item = Status>) -> i32 {
    if statuses.into_iter().any(|s| s == Status::Fails) {
        EXIT_FAIL
    } else {
        EXIT_OK
    }
}

fn cache_path(flag: Option<PathBuf>) -> Option<PathBuf> {
    flag.or_else(|| std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
}

fn verify(args: VerifyArgs, stdout: &mut dyn Write) -> Outcome {
    let params = verify_params(&args);
    let result = run_check(&args.check_id, &params)?;
    emit(&render_results(std::slice::from_ref(&result), &args.output), args.output.out.as_deref(), stdout)?;
    Ok(exit_code_for([result.status]))
}

fn run_sweep(args: SweepArgs, stdout: &mut dyn Write) -> Outcome {
    let mut spec = SweepSpec::new(&args.check_id, &args.grid)?;
    spec.budget = args.budget;
    spec.cache_path = cache_path(args.cache);
    let results = sweep(&spec)?;
    emit(&render_results(&results, &args.output), args.output.out.as_deref(), stdout)?;
    Ok(exit_code_for(results.iter().map(|r| r.status)))
}

fn probe_line(rec: &ConjectureRecord, conjecture: Conjecture) -> String {
    let mut line = format!("{} {}: ", conjecture.check_id(), rec.spec);
    match (&rec.ratio, &rec.min_coefficient) {
        (Some(q), Some(min)) => line.push_str(&format!("Laurent, min coefficient {min}, ratio {q}")),
        _ => line.push_str("not Laurent"),
    }
    if rec.contradicts_theorem() {
        line.push_str("  [contradicts the proved range]");
    } else if !rec.supports(conjecture) {
        line.push_str("  [counterexample to the conjecture]");
    }
    line
}

/// 1 iff some record is non-Laurent inside the proved `0 <= j <= m` range.
pub fn explore_exit_code(records: &[ConjectureRecord]) -> i32 {
    if records.iter().any(ConjectureRecord::contradicts_theorem) {
        EXIT_FAIL
    } else {
        EXIT_OK
    }
}

fn run_explore(args: ExploreArgs, stdout: &mut dyn Write) -> Outcome {
    let conjecture = match args.probe {
        Probe::Conj1 => Conjecture::One,
        Probe::Conj2 => Conjecture::Two,
    };
    let mut spec = SweepSpec::new(conjecture.check_id(), &args.grid)?;
    spec.budget = args.budget;
    spec.cache_path = cache_path(args.cache);
    let records = explore_grid(&spec)?;
    let text = match args.output.format {
        OutputFormat::Text => {
            let mut text: String = records.iter().map(|r| probe_line(r, conjecture) + "\n").collect();
            let against = records.iter().filter(|r| !r.supports(conjecture)).count();
            text.push_str(&format!("{} points, {} against the conjecture\n", records.len(), against));
            text
        }
        _ => {
            let results: Vec<CheckResult> =
                records.iter().map(|r| r.to_result(conjecture, std::time::Duration::ZERO)).collect();
            render_results(&results, &args.output)
        }
    };
    emit(&text, args.output.out.as_deref(), stdout)?;
    Ok(explore_exit_code(&records))
}

fn run_report(args: ReportArgs) -> Outcome {
    let path = cache_path(args.cache).ok_or_else(|| Failure::Usage(format!("no cache given (--cache or ${CACHE_ENV})")))?;
    let entries = read_entries(&path)?;
    let stamp = now();
    let records = entries
        .iter()
        .map(|e| e.to_result().map(|r| ReportRecord::new(r, stamp.clone())))
        .collect::<qcatalan::Result<Vec<_>>>()?;
    let format = match args.format {
        ReportFormat::Json => Format::Json,
        ReportFormat::Csv => Format::Csv,
        ReportFormat::Md => Format::Md,
    };
    std::fs::write(&args.out, render_report(&records, format, RenderOptions { timing: !args.no_timing }))?;
    Ok(exit_code_for(records.iter().map(|r| r.result.status)))
}

fn list(stdout: &mut dyn Write) -> Outcome {
    for def in CHECKS {
        writeln!(stdout, "{:<16} {:<22} {}", def.id, def.params.join(","), def.about)?;
    }
    writeln!(stdout, "{:<16} {:<22} even-family ratio at any j (explore)", "conj1", "a,ns,r,j")?;
    writeln!(stdout, "{:<16} {:<22} odd-family ratio at any j (explore)", "conj2", "a,ns,r,j")?;
    Ok(EXIT_OK)
}

/// Runs the command line with explicit output streams.
pub fn run_cli_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(rendered.as_bytes()) } else { stdout.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Verify(args) => verify(args, stdout),
        Command::Sweep(args) => run_sweep(args, stdout),
        Command::Explore(args) => run_explore(args, stdout),
        Command::Report(args) => run_report(args),
        Command::List => list(stdout),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let usage = Cli::command().render_usage();
            let _ = writeln!(stderr, "error: {msg}\n\n{usage}\n\nRun `qcatalan list` for the available checks.");
            EXIT_USAGE
        }
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_FAIL
        }
    }
}

/// Runs the command line against the process streams.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_cli_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
