use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use snakelab::checks::{catalog, run_all, run_check, CheckResult, Status};
use snakelab::table::{emit_table, Format, Object};

const USAGE_ERROR: u8 = 126;
const MAX_FAILURES: usize = 125;

#[derive(Parser)]
#[command(name = "snakelab", version, about = "Exhaustive verification of signed-permutation, path and snake identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum ReportFormat {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run one check or the whole catalog
    #[command(group(ArgGroup::new("which").required(true).args(["all", "check"])))]
    Verify {
        #[arg(long)]
        all: bool,
        #[arg(long, value_name = "ID")]
        check: Option<String>,
        /// Raise or lower every size ceiling to this value
        #[arg(long = "n", value_name = "K")]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: ReportFormat,
    },
    /// Print a table of Q, R, B, E, Eq or S for sizes 0..=K
    Compute {
        #[arg(value_enum)]
        object: Object,
        #[arg(long = "n", value_name = "K")]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List check ids with their default size ranges
    ListChecks,
}

fn list_checks() -> String {
    catalog()
        .iter()
        .map(|c| {
            let (lo, hi) = c.sizes(None);
            format!("{:<24} n={lo}..={hi:<3} {}", c.id, c.summary)
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn report(results: &[CheckResult], format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => {
            let count = |s| results.iter().filter(|r| r.status == s).count();
            let mut lines: Vec<String> = results.iter().map(ToString::to_string).collect();
            lines.push(format!(
                "{} passed, {} failed, {} skipped",
                count(Status::Pass),
                count(Status::Fail),
                count(Status::Skipped)
            ));
            lines.join("\n")
        }
        ReportFormat::Json => serde_json::to_string_pretty(results).expect("serializable results"),
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("SNAKELAB_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("SNAKELAB_THREADS must be a positive integer, got `{raw}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(USAGE_ERROR);
    }
    match cli.command {
        Command::ListChecks => {
            println!("{}", list_checks());
            ExitCode::SUCCESS
        }
        Command::Compute { object, n, format } => {
            println!("{}", emit_table(object, n, format));
            ExitCode::SUCCESS
        }
        Command::Verify { all, check, n, format } => {
            let results = if all {
                run_all(n)
            } else {
                let id = check.expect("clap enforces --all or --check");
                match run_check(&id, n) {
                    Ok(r) => vec![r],
                    Err(e) => {
                        eprintln!("error: {e}\nvalid ids:\n{}", list_checks());
                        return ExitCode::from(USAGE_ERROR);
                    }
                }
            };
            println!("{}", report(&results, format));
            let failures = results.iter().filter(|r| r.status == Status::Fail).count();
            ExitCode::from(failures.min(MAX_FAILURES) as u8)
        }
    }
}
