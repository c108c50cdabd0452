mod commands;
mod report;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lielab::regularity::Mode;
use lielab::{Budget, Error};
use serde_json::Value;

/// Exact computations with Lie algebras given by structure constants.
///
/// Reports are canonical JSON on stdout. Exit codes: 0 success or certified,
/// 1 refuted or a failing check, 2 inconclusive or out of budget, 3 bad input.
#[derive(Parser)]
#[command(name = "lielab", version)]
struct Cli {
    /// Seed for every randomized search.
    #[arg(long, global = true, default_value_t = Budget::default().seed)]
    seed: u64,
    /// Print a plain-text summary instead of JSON.
    #[arg(long, global = true)]
    human: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an algebra file and check the Jacobi identity or associativity.
    Validate { file: PathBuf },
    /// Structure, rank, regularity, anisotropy, centroid, derivations and H².
    Analyze { file: PathBuf },
    /// Rank: least r with a_r not identically zero.
    Rank { file: PathBuf },
    /// Is every nonzero element regular.
    Regular {
        file: PathBuf,
        #[arg(long)]
        mode: Option<Mode>,
    },
    /// Fitting components with respect to one element or an almost commuting set.
    Fitting {
        file: PathBuf,
        /// Coordinates `1,0,-2` or a label combination `2*e - h`; repeat for a set.
        #[arg(long = "element", required = true, allow_hyphen_values = true)]
        elements: Vec<String>,
    },
    /// Does every nonzero element have semisimple ad.
    Anisotropic {
        file: PathBuf,
        #[arg(long)]
        mode: Option<Mode>,
    },
    /// Is every element with nilpotent ad central.
    NilpotentFree {
        file: PathBuf,
        #[arg(long)]
        mode: Option<Mode>,
    },
    /// Write the target as [z, y].
    Commutator {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        /// Use the rank-one solver with this invariant form instead of a search.
        #[arg(long, value_parser = ["killing"])]
        form: Option<String>,
    },
    /// Derivation algebra.
    Derivations { file: PathBuf },
    /// Centroid.
    Centroid { file: PathBuf },
    /// Second cohomology with trivial coefficients.
    H2 { file: PathBuf },
    /// Minimal non-abelian / non-nilpotent / non-regular over a finite field.
    MinimalNon {
        file: PathBuf,
        #[arg(long)]
        property: String,
    },
    /// Named algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// All structure-constant tables of a small dimension over F_p.
    Enumerate {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        field: String,
    },
    /// Run the instance checks.
    Verify {
        /// Include elapsed times (the report is then no longer reproducible).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Emit {
        name: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<i64>,
        #[arg(long, default_value = "Q")]
        field: String,
    },
}

/// Result of a command: the report and the exit code it implies.
pub struct Outcome {
    pub report: Value,
    pub code: u8,
}

impl Outcome {
    pub fn ok(report: Value) -> Outcome {
        Outcome { report, code: 0 }
    }
}

fn budget_from_env(seed: u64) -> Result<Budget, Error> {
    let mut b = Budget::default().with_seed(seed);
    let read = |name: &str| -> Result<Option<u64>, Error> {
        match std::env::var(name) {
            Ok(v) => v.trim().parse().map(Some).map_err(|_| Error::InvalidParameters(format!("{name}={v}"))),
            Err(_) => Ok(None),
        }
    };
    if let Some(h) = read("LIELAB_SEARCH_HEIGHT")? {
        b.search_height = h as u32;
    }
    if let Some(t) = read("LIELAB_TRIALS")? {
        b.random_trials = t;
    }
    if let Some(c) = read("LIELAB_ENUM_CAP")? {
        b.enum_tables = c;
    }
    if let Some(d) = read("LIELAB_SYMBOLIC_DIM")? {
        b.symbolic_dim = d as usize;
    }
    Ok(b)
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Budget(_) => 2,
        _ => 3,
    }
}

fn main() -> ExitCode {
    // usage errors are bad input (3), not "inconclusive" (clap's default 2)
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    let result = budget_from_env(cli.seed).and_then(|budget| commands::run(cli.command, &budget));
    match result {
        Ok(out) => {
            let text =
                if cli.human { report::human(&out.report) } else { lielab::format::canonical_string(&out.report) };
            print!("{text}");
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("lielab: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
