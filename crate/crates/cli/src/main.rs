//! `cylfuse`: cylindric plane partitions, fusion coefficients and modular
//! data from the command line.
//!
//! Exit codes: 0 on success or agreement, 1 on a verification failure,
//! 2 on a usage error.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cylfuse::Partition;

/// Default enumeration cap (cells of a skew or cylindric shape) when
/// `CYLFUSE_MAX_CELLS` is unset.
pub const DEFAULT_MAX_CELLS: u64 = 40;
pub const MAX_K: usize = 4;
pub const MAX_N: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "cylfuse", version, about = "Cylindric plane partitions and generalised Verlinde algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: RunConfig,
}

#[derive(clap::Args, Debug, Clone)]
pub struct RunConfig {
    /// Number of variables / period of the loops.
    #[arg(long, global = true)]
    pub k: Option<usize>,
    /// Level.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Cylindric offset of the outer loop.
    #[arg(long, global = true, default_value_t = 0)]
    pub d: u64,
    /// Comma-separated weakly decreasing parts, e.g. `4,3,2`; empty for ∅.
    #[arg(long, global = true, value_parser = parse_partition, allow_hyphen_values = true)]
    pub lambda: Option<Partition>,
    #[arg(long, global = true, value_parser = parse_partition, allow_hyphen_values = true)]
    pub mu: Option<Partition>,
    #[arg(long, global = true, value_parser = parse_partition, allow_hyphen_values = true)]
    pub nu: Option<Partition>,
    /// Numeric tolerance (defaults: 1e-9, and 1e-6 for `verlinde`).
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for the randomised orbit check of `selftest`.
    #[arg(long, global = true, default_value_t = 20240917)]
    pub seed: u64,
    /// Lift the k ≤ 4, n ≤ 8 safety limit.
    #[arg(long, global = true)]
    pub unsafe_sizes: bool,
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub enum Command {
    /// Skew χ_{λ/μ}: closed form and rearrangement count.
    Chi,
    /// Cylindric χ_{λ/d/μ}: conjugate binomials and affine count.
    CylChi,
    /// h_{λ/μ} in the monomial basis.
    SkewH,
    /// h_{λ/d/μ} in the monomial basis and as Σ N h_ν.
    CylH,
    /// m_λ·m_μ in 𝒱_k(n), or N_{λμ}^ν with --nu.
    Fusion,
    /// All nonzero structure constants of 𝒱_k(n).
    FusionTable,
    /// Residue formula against the combinatorial N on every triple.
    Verlinde,
    /// Idempotents evaluated on the spectrum.
    Idempotents,
    /// Relations among the S, T, C matrices.
    Modular,
    /// The full acceptance grid.
    Selftest,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| format!("bad part {x:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::from_i64(&parts).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command, &cli.config) {
        Ok(out) => {
            match out.render(cli.config.format) {
                Ok(text) => print!("{text}"),
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
