//! The signet CLI: `signet <group> <cmd> [--json FILE|-]` for single
//! requests, `signet batch FILE [--jobs N]` for NDJSON streams, and
//! `signet accept [SUITE]` for the acceptance suites.

use clap::Parser;
use serde_json::{json, Value};
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "signet",
    version,
    about = "Exact signatures: forms, Sturm chains, Witt classes, Maslov indices, knot invariants",
    after_help = "\
Command groups: exact, forms, sturm, witt, maslov, knot — each command reads a
JSON parameter object (via --json FILE, --json - for stdin, or inline as the
third argument) and prints one JSON response. All numbers cross the wire as
strings. Exit codes: 0 success, 1 domain error, 2 usage, 3 I/O.

Examples:
  signet sturm count --json - <<< '{\"P\": [\"-1\", \"0\", \"1\"], \"a\": \"-2\", \"b\": \"2\"}'
  signet knot signature '{\"braid\": \"2: 1 1 1\"}'
  signet batch requests.ndjson --jobs 8
  signet accept knots"
)]
struct Cli {
    /// command group, or "batch" / "accept"
    group: String,
    /// command within the group; the file for batch, the suite for accept
    target: Option<String>,
    /// inline JSON parameter object
    params: Option<String>,
    /// read the JSON parameter object from FILE, or "-" for stdin
    #[arg(long)]
    json: Option<String>,
    /// worker threads for batch mode (default: all cores)
    #[arg(long)]
    jobs: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.group.as_str() {
        "batch" => run_batch(&cli),
        "accept" => run_accept(&cli),
        _ => run_single(&cli),
    }
}

fn io_fail(context: &str, e: impl std::fmt::Display) -> ExitCode {
    eprintln!("signet: {context}: {e}");
    ExitCode::from(3)
}

fn run_single(cli: &Cli) -> ExitCode {
    let cmd = match &cli.target {
        Some(c) => format!("{} {}", cli.group, c),
        None => {
            eprintln!("signet: usage: signet <group> <cmd> [PARAMS] [--json FILE|-]");
            return ExitCode::from(2);
        }
    };
    let raw = match (&cli.params, &cli.json) {
        (Some(inline), None) => inline.clone(),
        (None, Some(path)) if path == "-" => {
            let mut buf = String::new();
            if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
                return io_fail("reading stdin", e);
            }
            buf
        }
        (None, Some(path)) => match std::fs::read_to_string(path) {
            Ok(s) => s,
            Err(e) => return io_fail(path, e),
        },
        (None, None) => "{}".into(),
        (Some(_), Some(_)) => {
            eprintln!("signet: give parameters inline or via --json, not both");
            return ExitCode::from(2);
        }
    };
    let params: Value = match serde_json::from_str(raw.trim()) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("signet: bad parameter JSON: {e}");
            return ExitCode::from(2);
        }
    };
    let req = json!({ "cmd": cmd, "params": params });
    let (resp, code) = signet::cli::respond(&req);
    println!("{resp}");
    ExitCode::from(code as u8)
}

fn run_batch(cli: &Cli) -> ExitCode {
    let path = match cli.target.as_deref().or(cli.json.as_deref()) {
        Some(p) => p,
        None => {
            eprintln!("signet: usage: signet batch FILE [--jobs N]");
            return ExitCode::from(2);
        }
    };
    let text = if path == "-" {
        let mut buf = String::new();
        match std::io::stdin().read_to_string(&mut buf) {
            Ok(_) => buf,
            Err(e) => return io_fail("reading stdin", e),
        }
    } else {
        match std::fs::read_to_string(path) {
            Ok(s) => s,
            Err(e) => return io_fail(path, e),
        }
    };
    let lines: Vec<String> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(String::from)
        .collect();
    use std::io::Write;
    let out = std::io::stdout();
    let mut w = std::io::BufWriter::new(out.lock());
    for resp in signet::cli::batch(&lines, cli.jobs) {
        if let Err(e) = writeln!(w, "{resp}") {
            return io_fail("writing output", e);
        }
    }
    if let Err(e) = w.flush() {
        return io_fail("writing output", e);
    }
    ExitCode::SUCCESS
}

fn run_accept(cli: &Cli) -> ExitCode {
    let suite = cli.target.as_deref().unwrap_or("all");
    let reports = match signet::accept::run_suite(suite) {
        Some(r) => r,
        None => {
            eprintln!(
                "signet: unknown suite {suite:?}; choose one of {}",
                signet::accept::SUITES.join(", ")
            );
            return ExitCode::from(2);
        }
    };
    let mut failed = 0;
    for r in &reports {
        println!("{}", r.line());
        if !r.passed {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", reports.len());
        ExitCode::from(1)
    } else {
        println!("all {} criteria passed", reports.len());
        ExitCode::SUCCESS
    }
}
