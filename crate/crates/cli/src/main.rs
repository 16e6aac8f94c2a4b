use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};

use carlitz_cli::{emit_table, expand, padic_run, run_suite, CliError, ExpandTarget, RunOptions, Selection, TableFormat, TableKind};

#[derive(Parser)]
#[command(name = "carlitz", version, about = "Exact q-Bernoulli / q-Stirling workbench and identity checker")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check registered identities and report counterexamples.
    Verify {
        /// `all`, or a comma-separated list of identity ids.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Replace the main index bound of every selected identity.
        #[arg(long)]
        max_n: Option<u32>,
        /// Write the full report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
        /// Stop starting new cells after this many seconds.
        #[arg(long)]
        budget_secs: Option<f64>,
        /// Include a timestamp in the report (breaks byte-identical reruns).
        #[arg(long)]
        timestamp: bool,
        /// List the registered identities and exit.
        #[arg(long)]
        list: bool,
    },
    /// Print an exact table.
    Table {
        #[arg(long, value_enum)]
        kind: TableKind,
        #[arg(long, default_value_t = 6)]
        max_n: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// Riemann sums of [x]_q^n against beta_n in Z_p.
    Padic {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 25)]
        precision: u32,
        #[arg(long)]
        q: i64,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, default_value_t = 5)]
        levels: u32,
    },
    /// Both sides of a generating-function identity as q-series.
    Expand {
        #[arg(long, value_enum)]
        target: ExpandTarget,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Verify { suite, max_n, report, format: ReportFormat::Json, budget_secs, timestamp, list } => {
            if list {
                for d in carlitz_cli::registry() {
                    for e in d.entries {
                        println!("{} [{}] {}: {} ({})", e.id, e.variant, e.expect.as_str(), e.description, d.space);
                    }
                }
                return Ok(0);
            }
            let budget = match budget_secs {
                Some(s) if !(s > 0.0) => return Err(CliError::Usage("--budget-secs must be positive".into())),
                s => s.map(Duration::from_secs_f64),
            };
            let mut rep = run_suite(&Selection::parse(&suite), &RunOptions { max_n, budget })?;
            if timestamp {
                rep.timestamp = Some(SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()));
            }
            print!("{}", rep.to_text());
            if let Some(path) = report {
                std::fs::write(path, rep.to_json())?;
            }
            Ok(rep.exit_code())
        }
        Command::Table { kind, max_n, format } => {
            print!("{}", emit_table(kind, max_n, format));
            Ok(0)
        }
        Command::Padic { p, precision, q, n, levels } => {
            let v = padic_run(p, precision, q, n, levels)?;
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
            Ok(if v["converges"].as_bool() == Some(true) { 0 } else { 1 })
        }
        Command::Expand { target, m, order } => {
            let (text, equal) = expand(target, m, order);
            print!("{text}");
            Ok(if equal { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("carlitz: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
