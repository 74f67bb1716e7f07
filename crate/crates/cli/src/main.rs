mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use commands::{Outcome, Polytope};
use report::{Report, Timing};

/// Locked subsets, base-polytope facets and greedy optimization over explicit matroids.
#[derive(Parser)]
#[command(name = "matlock", version)]
struct Cli {
    /// Print the report as JSON instead of aligned text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Size, rank, basis count and connectivity.
    Info { file: PathBuf },
    /// Locked subsets with their ranks, or the k-locked verdict.
    Locked {
        file: PathBuf,
        /// Answer "No" when there are more than |E|^k locked subsets.
        #[arg(long)]
        k: Option<u32>,
    },
    /// The predicted facet description.
    Facets {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "bases")]
        polytope: Polytope,
    },
    /// Compare predicted facets with brute-force enumeration. Exits 1 on mismatch.
    Certify { file: PathBuf },
    /// Maximum-weight basis by the greedy algorithm.
    Mwbp {
        file: PathBuf,
        /// Comma-separated weights in ground-set order, e.g. 3,-1/2,0.25
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
    },
    /// Uniformity test with its witness condition. Exits 1 if it disagrees with counting bases.
    Uniform { file: PathBuf },
    /// 2-sum of two matroid files along the given basepoints.
    TwoSum {
        first: PathBuf,
        second: PathBuf,
        /// Basepoints as p1,p2
        #[arg(long)]
        base: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write a named matroid (MK4, W3, Q6, P6, V8, U_r_n) to a file; lists names without one.
    Catalog {
        name: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Info { .. } => "info",
            Command::Locked { .. } => "locked",
            Command::Facets { .. } => "facets",
            Command::Certify { .. } => "certify",
            Command::Mwbp { .. } => "mwbp",
            Command::Uniform { .. } => "uniform",
            Command::TwoSum { .. } => "two-sum",
            Command::Catalog { .. } => "catalog",
        }
    }

    fn run(&self) -> anyhow::Result<Outcome> {
        match self {
            Command::Info { file } => commands::info(file),
            Command::Locked { file, k } => commands::locked(file, *k),
            Command::Facets { file, polytope } => commands::facets(file, *polytope),
            Command::Certify { file } => commands::certify_file(file),
            Command::Mwbp { file, weights } => commands::mwbp(file, weights),
            Command::Uniform { file } => commands::uniform(file),
            Command::TwoSum {
                first,
                second,
                base,
                output,
            } => commands::two_sum(first, second, base, output),
            Command::Catalog { name, output } => {
                commands::catalog_entry(name.as_deref(), output.as_deref())
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = match cli.command.run() {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let report = Report {
        command: cli.command.name().to_string(),
        inputs: outcome.inputs,
        results: outcome.results,
        timing: Timing {
            micros: start.elapsed().as_micros() as u64,
        },
    };
    if cli.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if outcome.mismatch {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
