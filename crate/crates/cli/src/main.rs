use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod error;

use error::CliError;

/// Spanning trees of small average distance, with certificates.
#[derive(Parser)]
#[command(name = "spanmu", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Where the input graph comes from.
#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct Source {
    /// Graph file in spanmu-graph v1 format.
    file: Option<PathBuf>,
    /// Generate the graph from a family spec instead.
    #[arg(long = "gen", value_name = "SPEC")]
    family: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a spanning tree and print its certificate.
    Construct {
        #[command(flatten)]
        source: Source,
        /// Grow from this vertex only.
        #[arg(long, conflicts_with = "all_starts")]
        start: Option<usize>,
        /// Try every start vertex and keep the best tree (default).
        #[arg(long)]
        all_starts: bool,
        /// Skip the case analysis and certify k + 1 only.
        #[arg(long)]
        no_refine: bool,
        /// Also compute the exact independence number.
        #[arg(long)]
        alpha: bool,
        /// Time budget for the independence number, in milliseconds.
        #[arg(long, default_value_t = 10_000)]
        alpha_budget_ms: u64,
        /// Print JSON (default).
        #[arg(long, conflicts_with = "table")]
        json: bool,
        /// Print a human-readable table.
        #[arg(long)]
        table: bool,
    },
    /// Check a certificate against a graph file.
    Verify {
        file: PathBuf,
        certificate: PathBuf,
        /// Time budget for the independence number, in milliseconds.
        #[arg(long, default_value_t = 10_000)]
        alpha_budget_ms: u64,
    },
    /// Compare the construction with the exhaustive optimum.
    Oracle {
        #[command(flatten)]
        source: Source,
        /// Refuse graphs with more spanning trees than this.
        #[arg(long, default_value_t = spanmu::oracle::DEFAULT_CAP)]
        cap: u64,
    },
    /// Run the construction over graph families and write a CSV table.
    Bench {
        /// Family spec; may be repeated.
        #[arg(long = "family", value_name = "SPEC", required = true)]
        families: Vec<String>,
        /// Instances per family.
        #[arg(long, default_value_t = 1)]
        reps: u64,
        /// Base seed; instance i uses seed + 1000 i.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file (stdout if absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Time budget for each independence number, in milliseconds.
        #[arg(long, default_value_t = 10_000)]
        alpha_budget_ms: u64,
    },
    /// Write a generated graph in spanmu-graph v1 format.
    Gen {
        #[arg(long = "family", value_name = "SPEC")]
        family: String,
        /// Output file (stdout if absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Construct { source, start, all_starts: _, no_refine, alpha, alpha_budget_ms, json: _, table } => {
            let g = commands::load(source.file.as_deref(), source.family.as_deref())?;
            commands::construct(&g, start, !no_refine, alpha.then_some(alpha_budget_ms), table)
        }
        Command::Verify { file, certificate, alpha_budget_ms } => {
            commands::verify(&file, &certificate, alpha_budget_ms)
        }
        Command::Oracle { source, cap } => {
            let g = commands::load(source.file.as_deref(), source.family.as_deref())?;
            commands::oracle(&g, cap)
        }
        Command::Bench { families, reps, seed, out, alpha_budget_ms } => {
            commands::bench(&families, reps, seed, out.as_deref(), alpha_budget_ms)
        }
        Command::Gen { family, out } => commands::gen(&family, out.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.message);
            ExitCode::from(e.code)
        }
    }
}
