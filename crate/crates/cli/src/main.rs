use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use hb1::report::{exit_code, run_suite, Options, ReportError};

/// Runs a verification suite and writes its check records as JSON.
#[derive(Parser, Debug)]
#[command(name = "hb1", version)]
struct Cli {
    /// One of verify-h, verify-double, census, yd, nichols, bosonize, lift, all.
    suite: String,
    /// Suite action: `yd verify|braiding`, `nichols series|relations|factorization`,
    /// `lift build|verify|degeneration|iso`.
    action: Option<String>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    max_degree: Option<usize>,
    /// Largest tensor power dimension for symmetrizer ranks.
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long)]
    tag: Option<String>,
    #[arg(long)]
    left: Option<String>,
    #[arg(long)]
    right: Option<String>,
    /// Family number such as 14, or Omega25.
    #[arg(long)]
    family: Option<String>,
    /// JSON file with a lifting spec or its `params` object.
    #[arg(long)]
    params: Option<PathBuf>,
    /// JSON file with an isomorphism witness.
    #[arg(long)]
    witness: Option<PathBuf>,
    /// Check every catalog object (the default for `yd verify`).
    #[arg(long)]
    all: bool,
}

fn read_json(path: &PathBuf) -> Result<serde_json::Value, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<i32, (i32, String)> {
    let usage = |e: String| (2, e);
    let opts = Options {
        max_degree: cli.max_degree,
        cap: cli.cap,
        tag: cli.tag,
        left: cli.left,
        right: cli.right,
        family: cli.family,
        params: cli.params.as_ref().map(read_json).transpose().map_err(usage)?,
        witness: cli.witness.as_ref().map(read_json).transpose().map_err(usage)?,
    };
    let records = run_suite(&cli.suite, cli.action.as_deref(), &opts).map_err(|e: ReportError| (e.exit_code(), e.to_string()))?;
    let text = serde_json::to_string_pretty(&records).expect("records are plain data") + "\n";
    match &cli.out {
        Some(p) => std::fs::write(p, text).map_err(|e| (2, format!("{}: {e}", p.display())))?,
        None => print!("{text}"),
    }
    Ok(exit_code(&records))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err((code, msg)) => {
            eprintln!("hb1: {msg}");
            ExitCode::from(code as u8)
        }
    }
}
