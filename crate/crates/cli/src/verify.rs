//! The `verify` command: drive the exhaustive/randomized suites with
//! caller-supplied bounds, print one summary line per suite plus every
//! counterexample, and report through JSON when asked.

use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Result};
use serde_json::json;

use endoscopy_core::suites::{
    run_anticom, run_claims, run_diagram, run_gauss, run_invariant_map, run_pairings, run_signs,
    Bounds, SuiteReport,
};

use crate::report;
use crate::Suite;

const MAX_RANK_CAP: usize = 3;
const MAX_ORDER_CAP: usize = 6;
const MAX_PRIME_CAP: u64 = 101;

pub fn run(
    suite: Suite,
    max_rank: usize,
    max_order: usize,
    primes: Vec<u64>,
    random: usize,
    seed: u64,
    json_out: Option<&Path>,
) -> Result<ExitCode> {
    if max_rank == 0 || max_rank > MAX_RANK_CAP {
        bail!("--max-rank must be between 1 and {MAX_RANK_CAP}");
    }
    if max_order == 0 || max_order > MAX_ORDER_CAP {
        bail!("--max-order must be between 1 and {MAX_ORDER_CAP}");
    }
    for &p in &primes {
        if !(3..=MAX_PRIME_CAP).contains(&p) || p % 2 == 0 {
            bail!("--primes entries must be odd primes between 3 and {MAX_PRIME_CAP} (got {p})");
        }
    }
    let bounds = Bounds { max_rank, max_order, primes: primes.clone(), random, seed };
    let reports: Vec<SuiteReport> = match suite {
        Suite::Signs => vec![run_signs(&bounds)],
        Suite::Claims => vec![run_claims(&bounds)],
        Suite::Pairings => vec![run_pairings(&bounds), run_invariant_map(&bounds)],
        Suite::Anticom => vec![run_anticom(&bounds)],
        Suite::Gauss => vec![run_gauss(&bounds.primes)],
        Suite::Diagram => vec![run_diagram(&bounds)],
        Suite::All => endoscopy_core::suites::run_all(&bounds),
    };

    let mut any_failed = false;
    for r in &reports {
        println!("suite {}: {} cases, {} passed, {} failed", r.name, r.total(), r.passed(), r.failed());
        for f in r.failures() {
            any_failed = true;
            println!("  FAIL {}: {}", f.key, f.detail);
        }
    }

    if let Some(path) = json_out {
        let body = json!({
            "version": 1,
            "input": {
                "suite": format!("{suite:?}").to_lowercase(),
                "max_rank": max_rank,
                "max_order": max_order,
                "primes": primes,
                "random": random,
                "seed": seed,
            },
            "suites": reports.iter().map(|r| json!({
                "name": r.name,
                "total": r.total(),
                "passed": r.passed(),
                "failed": r.failed(),
                "failures": r.failures().map(|f| json!({
                    "key": f.key,
                    "witness": f.detail,
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "summary": {
                "total": reports.iter().map(SuiteReport::total).sum::<usize>(),
                "failed": reports.iter().map(SuiteReport::failed).sum::<usize>(),
            }
        });
        let full = report::wrap(body);
        std::fs::write(path, format!("{}\n", serde_json::to_string_pretty(&full)?))?;
    }

    Ok(if any_failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}
