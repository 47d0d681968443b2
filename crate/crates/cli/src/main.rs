//! `srgqec`: quadratic embedding constants from the command line.
//!
//! Exit codes: 0 success, 1 input error, 2 disconnected graph,
//! 3 not of QE class, 4 table mismatch.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qec_core::Error;

#[derive(Debug, Parser)]
#[command(name = "srgqec", version, about = "Quadratic embedding constants of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Edge-list file: header "n m", then m lines "u v" (0-based, '#' comments).
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
    /// Generator spec family[:p1[,p2...]], e.g. petersen, cycle:5, paley:13.
    #[arg(long = "gen", value_name = "SPEC")]
    pub generator: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the QEC of a graph (numeric, cross-checked for SRGs).
    Qec {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        json: bool,
    },
    /// Check an SRG parameter tuple and evaluate the closed forms.
    Check {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(allow_negative_numbers = true)]
        k: i64,
        #[arg(allow_negative_numbers = true)]
        lambda: i64,
        #[arg(allow_negative_numbers = true)]
        mu: i64,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate feasible SRG parameter tuples with n <= N_MAX.
    Scan {
        #[arg(allow_negative_numbers = true)]
        n_max: i64,
        /// JSON lines instead of TSV.
        #[arg(long)]
        json: bool,
    },
    /// Construct a quadratic embedding and write it as JSON.
    Embed {
        #[command(flatten)]
        source: GraphSource,
        /// Output path; stdout when omitted.
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Reproduce the named strongly regular graph table.
    Table {
        #[arg(long)]
        json: bool,
    },
}

/// Process exit status for an error.
pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Input(_) | Error::Numerical { .. } => 1,
        Error::Disconnected => 2,
        Error::NotQeClass { .. } => 3,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Qec { source, json } => commands::qec(&source, json),
        Command::Check { n, k, lambda, mu, json } => commands::check(n, k, lambda, mu, json),
        Command::Scan { n_max, json } => commands::scan(n_max, json),
        Command::Embed { source, output } => commands::embed(&source, output.as_deref()),
        Command::Table { json } => commands::table(json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
