//! `trifree` command-line front-end.
//!
//! Exit status: 0 on success, 1 when a bound is violated, 2 on usage or
//! input errors. The worker count for parallel scans and enumeration comes
//! from `TRIFREE_WORKERS` (default: all cores).

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use trifree::bounds::VERDICT_TOL;
use trifree::independence::DEFAULT_BUDGET;

pub const WORKERS_ENV: &str = "TRIFREE_WORKERS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TierArg {
    Basic,
    Extended,
}

impl From<TierArg> for trifree::srg::Tier {
    fn from(t: TierArg) -> Self {
        match t {
            TierArg::Basic => trifree::srg::Tier::Basic,
            TierArg::Extended => trifree::srg::Tier::Extended,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "trifree", version, about = "Spectral bounds for triangle-free graphs")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Slack allowed when judging the eigenvalue bounds.
    #[arg(long, global = true, default_value_t = VERDICT_TOL)]
    pub tol: f64,
    /// Node budget for the exact independence number.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Include wall-clock runtimes (output is then not reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Spectrum, trace identities and bound report of one graph.
    Analyze {
        /// Edge-list or graph6 file, a graph6 string, or `named:NAME`.
        input: String,
    },
    /// Feasible parameter sets (n, k, 0, b) up to `--n-max`.
    SrgTable {
        #[arg(long, default_value_t = 816)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = TierArg::Basic)]
        tier: TierArg,
        /// Compare with the published table and annotate differences.
        #[arg(long)]
        diff_paper: bool,
    },
    /// Feasibility, eigenvalue data and the 0.14 threshold chain.
    SrgCheck {
        n: u32,
        k: u32,
        a: u32,
        b: u32,
        #[arg(long, value_enum, default_value_t = TierArg::Extended)]
        tier: TierArg,
    },
    /// Check both bounds on every labelled triangle-free graph of order n.
    Scan {
        #[arg(long)]
        n: usize,
        /// Allow n = 8 (2^28 edge masks).
        #[arg(long)]
        allow_n8: bool,
    },
    /// Seeded local search for large (mu1 + mun) / n.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        iters: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// The seven triangle-free strongly regular graphs.
    Named {
        /// Print this graph in graph6 instead of the list.
        name: Option<String>,
        /// List all constructions (the default without NAME).
        #[arg(long)]
        list: bool,
    },
    /// Maximiser and maximum of f(a) = (a - 2a^2) / (1 - a).
    Fmax,
}

/// Result of a command: rendered output and whether a bound failed.
pub struct Rendered {
    pub text: String,
    pub violation: bool,
}

fn configure_workers() -> Result<(), String> {
    let Ok(raw) = std::env::var(WORKERS_ENV) else {
        return Ok(());
    };
    let workers: usize = raw
        .parse()
        .ok()
        .filter(|&w| w > 0)
        .ok_or_else(|| format!("{WORKERS_ENV} must be a positive integer, got '{raw}'"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_workers().and_then(|()| commands::run(&cli).map_err(|e| e.to_string()));
    match result {
        Ok(out) => {
            print!("{}", out.text);
            if out.violation {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
