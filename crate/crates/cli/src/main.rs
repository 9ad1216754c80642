//! `bergekit`: build, check and bound Berge-free hypergraphs.
//!
//! Exit codes: 0 on success (or pattern absent), 2 when a pattern or a
//! counterexample is found, 1 on any error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "bergekit", version, about = "Berge-free hypergraph constructions, detectors and bounds")]
pub struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0, display_order = 100)]
    pub seed: u64,
    /// Worker threads; output does not depend on this.
    #[arg(long, global = true, default_value_t = 1, display_order = 101)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the finite-field hypergraph and write it with labels and parameters.
    Construct(ConstructArgs),
    /// Search a hypergraph for a Berge copy of a pattern.
    Verify(VerifyArgs),
    /// Print upper bounds, and the construction's count when given (r, l, q).
    Bounds(BoundsArgs),
    /// Exact Turán number of a tiny instance by exhaustive search.
    Extremal(ExtremalArgs),
    /// Check the finite-field identities the construction relies on.
    Lemmas(LemmasArgs),
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// Uniformity (number of parts).
    #[arg(long)]
    pub r: usize,
    /// Number of multipliers.
    #[arg(long)]
    pub l: usize,
    /// Field order as `p^k` (or a plain prime power).
    #[arg(long)]
    pub q: String,
    /// Explicit alpha values in field text form, one per part.
    #[arg(long = "alphas")]
    pub alphas: Vec<String>,
    /// Explicit multipliers in field text form.
    #[arg(long = "ms")]
    pub ms: Vec<String>,
    /// Edge-list output path.
    #[arg(long)]
    pub out: PathBuf,
    /// Label table path (default: `<out>` with extension `labels.json`).
    #[arg(long)]
    pub labels: Option<PathBuf>,
    /// Parameter file path (default: `<out>` with extension `params.json`).
    #[arg(long)]
    pub params: Option<PathBuf>,
    /// Also run the detectors and the pairwise common-neighbourhood scan.
    #[arg(long)]
    pub check: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Edge-list file.
    #[arg(long)]
    pub input: PathBuf,
    /// `c2`, `c3`, `k2t:<t>` or `generic:<file>`.
    #[arg(long)]
    pub pattern: String,
    /// Certificate path; printed to stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// Uniformity.
    #[arg(long)]
    pub r: usize,
    /// Forbidden K_{2,t+1}, given as t.
    #[arg(long, requires = "n", conflicts_with_all = ["l", "q"])]
    pub t: Option<u64>,
    /// Vertex count (part size for the r-partite bound).
    #[arg(long, requires = "t")]
    pub n: Option<u64>,
    /// Number of multipliers of the construction.
    #[arg(long, requires = "q")]
    pub l: Option<usize>,
    /// Field order of the construction.
    #[arg(long, requires = "l")]
    pub q: Option<String>,
    /// Print JSON instead of a table.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ExtremalArgs {
    /// Uniformity.
    #[arg(long)]
    pub r: usize,
    /// Vertex count, or part size with `--rpartite`.
    #[arg(long)]
    pub n: usize,
    /// Comma-separated patterns, e.g. `c2,c3,k2t:3`.
    #[arg(long, value_delimiter = ',', required = true)]
    pub forbid: Vec<String>,
    /// Restrict to r-partite hypergraphs with parts of size `n`.
    #[arg(long)]
    pub rpartite: bool,
    /// Stop after this many search nodes.
    #[arg(long)]
    pub budget_nodes: Option<u64>,
    #[arg(long)]
    pub budget_seconds: Option<f64>,
    /// Result path; printed to stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LemmasArgs {
    /// Field order as `p^k`.
    #[arg(long)]
    pub q: String,
    /// Samples per identity on fields too large for exhaustive checking.
    #[arg(long, default_value_t = 10_000)]
    pub samples: u64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
