//! Batch front end: parse datum/twist/endoscopy specifications, run the
//! analysis checks and the lemma-verification suites, and emit machine- and
//! human-readable reports.
//!
//! Exit codes: 0 all checks pass, 1 at least one counterexample, 2 on
//! parse/validation errors.

mod analyze;
mod input;
mod report;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "endoscopy", version, about = "Exact checks for unramified root data, endoscopic signs, and cyclic Tate cohomology")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a single input specification file
    Analyze {
        /// Path to an InputSpec JSON file
        file: PathBuf,
        /// Also write the full report to this path
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run a lemma-verification suite
    Verify {
        /// Which suite to run
        #[arg(value_enum)]
        suite: Suite,
        /// Catalog rank bound (cap 3)
        #[arg(long, default_value_t = 3)]
        max_rank: usize,
        /// Cyclic order bound for lattice suites (cap 6)
        #[arg(long, default_value_t = 6)]
        max_order: usize,
        /// Primes for the Gauss-sum suite (odd, <= 101)
        #[arg(long, value_delimiter = ',', default_values_t = vec![3u64, 5, 7, 11, 13])]
        primes: Vec<u64>,
        /// Random case count (conjugates, coboundaries, matrices)
        #[arg(long, default_value_t = 200)]
        random: usize,
        /// Seed for all randomized case generation
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the full report to this path
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// List the built-in datum catalog with Weyl group orders
    Catalog {
        /// Only show names containing this substring
        #[arg(long)]
        filter: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Suite {
    Signs,
    Pairings,
    Anticom,
    Diagram,
    Gauss,
    Claims,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { file, json } => analyze::run(&file, json.as_deref()),
        Command::Verify { suite, max_rank, max_order, primes, random, seed, json } => {
            verify::run(suite, max_rank, max_order, primes, random, seed, json.as_deref())
        }
        Command::Catalog { filter } => {
            catalog(filter.as_deref());
            Ok(ExitCode::SUCCESS)
        }
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn catalog(filter: Option<&str>) {
    let mut entries = endoscopy_core::root_datum::catalog_entries();
    entries.sort();
    for (name, rank, weyl) in entries {
        if let Some(f) = filter {
            if !name.contains(f) {
                continue;
            }
        }
        println!("{name}  rank={rank}  |W|={weyl}");
    }
}
