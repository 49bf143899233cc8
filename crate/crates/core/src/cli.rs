//! The `diffexp` command line: `check`, `list` and `explain`.
//!
//! Exit codes: 0 when every selected law behaved as registered (negative
//! controls fail), 1 when some law did not, 2 on a usage or configuration
//! error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::law::{find_law, parse_suites, registry, run_registry, CheckConfig, ConfigError, RunReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_LAW_FAILURE: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "diffexp", version, about = "Check the laws of differential exponential maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Md,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the selected suites and write a report.
    Check(CheckArgs),
    /// List every registered law with its model and reference.
    List,
    /// Describe one law: both sides, its reference and how it is checked.
    Explain { id: String },
}

#[derive(Debug, clap::Args)]
struct CheckArgs {
    /// Suite to run; repeat for several. Defaults to all of them.
    #[arg(long = "suite")]
    suites: Vec<String>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 64)]
    samples: usize,
    #[arg(long, default_value_t = 1e-9, allow_hyphen_values = true)]
    tol: f64,
    #[arg(long = "max-degree", default_value_t = 3)]
    max_degree: usize,
    #[arg(long, value_enum, default_value_t = Format::Md)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Record wall-clock time per law. Reports then differ between runs.
    #[arg(long)]
    timings: bool,
}

/// Entry point used by the binary. Writes to the process's stdout and stderr.
pub fn run<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

/// Same as [`run`] with explicit output streams.
pub fn run_with<I: IntoIterator<Item = OsString>>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match cli.command {
        Command::Check(args) => check(args, out, err),
        Command::List => {
            for spec in registry() {
                let _ = writeln!(out, "{}  {}  {}", spec.id, spec.model, spec.paper_ref);
            }
            EXIT_OK
        }
        Command::Explain { id } => match find_law(&id) {
            Ok(spec) => {
                let _ = write!(out, "{}", spec.explain());
                EXIT_OK
            }
            Err(e) => config_error(err, &e),
        },
    }
}

fn config_error(err: &mut dyn Write, e: &ConfigError) -> i32 {
    let _ = writeln!(err, "error: {e}");
    EXIT_CONFIG
}

fn check(args: CheckArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let suites = match parse_suites(&args.suites) {
        Ok(s) => s,
        Err(e) => return config_error(err, &e),
    };
    let mut cfg = CheckConfig::default()
        .with_seed(args.seed)
        .with_samples(args.samples)
        .with_tol(args.tol)
        .with_max_degree(args.max_degree);
    cfg.record_timings = args.timings;
    let laws = match run_registry(&suites, &cfg) {
        Ok(l) => l,
        Err(e) => return config_error(err, &e),
    };
    let report = RunReport::new(&cfg, suites.iter().map(|s| s.name().to_string()).collect(), laws);
    let text = match args.format {
        Format::Json => report.to_json() + "\n",
        Format::Md => report.to_markdown(),
    };
    let written = match &args.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(err, "error: {msg}");
        return EXIT_CONFIG;
    }
    for law in report.laws.iter().filter(|l| l.unexpected()) {
        let what = if law.expect_pass { "failed" } else { "unexpectedly held" };
        let _ =
            writeln!(err, "{} {what}: {}", law.id, law.witnesses.first().map(String::as_str).unwrap_or("no witness"));
    }
    if report.ok() {
        EXIT_OK
    } else {
        EXIT_LAW_FAILURE
    }
}
