//! Batch command-line front end.

mod output;
mod verify;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::afamily::{FamilyDumpA, FamilyParamsA};
use crate::bfamily::{FamilyDumpB, FamilyParamsB};
use crate::error::Error;
use crate::exactnum::Rational;
use crate::limits::{contract_a, contract_b, contract_gf_check};

pub use output::{Emitted, Format};
pub use verify::{run_verify, VerifyCase, VerifyOptions, VerifyReport};

/// Largest `N` accepted on exact-arithmetic paths.
pub const MAX_N_EXACT: usize = 64;
/// Largest `N` accepted on floating-point paths.
pub const MAX_N_FLOAT: usize = 256;
/// Environment variable overriding the default output directory.
pub const OUT_DIR_ENV: &str = "SU2_DORTHO_OUT_DIR";

#[derive(Parser, Debug, Clone)]
#[command(name = "su2-dortho", version, about = "d-orthogonal polynomials from su(2) matrix elements")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Json, global = true)]
    pub format: FormatArg,

    /// Output file; `-` writes to stdout. Defaults to `<dir>/<command>.<ext>`
    /// with `<dir>` taken from SU2_DORTHO_OUT_DIR or the current directory.
    #[arg(long, global = true)]
    pub out: Option<String>,

    /// Seed for randomized parameter sampling.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormatArg {
    Json,
    Csv,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Dump the A family for (q, c, N).
    GenA(GenAArgs),
    /// Dump the B family for (M, f, N).
    GenB(GenBArgs),
    /// Run the exact invariant suite.
    Verify(VerifyArgs),
    /// Meixner contraction of the A family.
    ContractA(ContractAArgs),
    /// Contraction of the B matrix elements.
    ContractB(ContractBArgs),
    /// Contracted generating function of the A family.
    GfCheck(GfCheckArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::GenA(_) => "gen-a",
            Command::GenB(_) => "gen-b",
            Command::Verify(_) => "verify",
            Command::ContractA(_) => "contract-a",
            Command::ContractB(_) => "contract-b",
            Command::GfCheck(_) => "gf-check",
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct GenAArgs {
    #[arg(long)]
    pub q: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Rational,
    #[arg(long = "N")]
    pub n: usize,
}

#[derive(Args, Debug, Clone)]
pub struct GenBArgs {
    #[arg(long = "M")]
    pub m: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub f: Rational,
    #[arg(long = "N")]
    pub n: usize,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    /// Largest N in the exact grids.
    #[arg(long = "N-max")]
    pub n_max: Option<usize>,
    /// CI tier: N ≤ 6 and indices ≤ 5 in the decomposition checks.
    #[arg(long)]
    pub quick: bool,
}

#[derive(Args, Debug, Clone)]
pub struct ContractAArgs {
    #[arg(long)]
    pub q: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Rational,
    #[arg(long)]
    pub j: usize,
    #[arg(long = "N", value_delimiter = ',', required = true)]
    pub n: Vec<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct ContractBArgs {
    #[arg(long = "M")]
    pub m: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Rational,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Rational,
    #[arg(long)]
    pub j: usize,
    #[arg(long)]
    pub q: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long = "N", value_delimiter = ',', required = true)]
    pub n: Vec<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct GfCheckArgs {
    #[arg(long)]
    pub q: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Rational,
    /// Rational value of eta.
    #[arg(long, allow_hyphen_values = true)]
    pub eta: Rational,
    #[arg(long = "N", value_delimiter = ',', required = true)]
    pub n: Vec<usize>,
}

/// Outcome of a run, mapped to the process exit code by [`Outcome::code`].
#[derive(Debug)]
pub enum Outcome {
    Success(Emitted),
    /// An invariant failed; carries the first failing residual.
    InvariantFailure { emitted: Emitted, first_failure: String },
    InvalidConfig(String),
}

impl Outcome {
    pub fn code(&self) -> i32 {
        match self {
            Outcome::Success(_) => 0,
            Outcome::InvariantFailure { .. } => 1,
            Outcome::InvalidConfig(_) => 2,
        }
    }
}

fn bound(ns: &[usize], max: usize) -> Result<(), Error> {
    match ns.iter().find(|&&n| n > max) {
        Some(n) => Err(Error::InvalidParams(format!("N = {n} exceeds the limit {max}"))),
        None => Ok(()),
    }
}

/// Executes one configuration. Errors from parameter validation map to
/// [`Outcome::InvalidConfig`].
pub fn run(config: &RunConfig) -> Outcome {
    match run_inner(config) {
        Ok(o) => o,
        Err(e) => Outcome::InvalidConfig(e.to_string()),
    }
}

fn run_inner(config: &RunConfig) -> Result<Outcome, Error> {
    let format = Format::from(config.format);
    let name = config.command.name();
    let emit = |doc: output::Document| output::emit(&doc, format, config.out.as_deref(), name);
    match &config.command {
        Command::GenA(a) => {
            bound(&[a.n], MAX_N_EXACT)?;
            let dump = FamilyDumpA::build(&FamilyParamsA::new(a.q, a.c.clone(), a.n)?)?;
            Ok(Outcome::Success(emit(output::Document::FamilyA(dump))?))
        }
        Command::GenB(b) => {
            bound(&[b.n], MAX_N_EXACT)?;
            let dump = FamilyDumpB::build(&FamilyParamsB::new(b.m, b.f.clone(), b.n)?)?;
            Ok(Outcome::Success(emit(output::Document::FamilyB(dump))?))
        }
        Command::Verify(v) => {
            let opts = VerifyOptions::from_args(v, config.seed);
            bound(&[opts.n_max], MAX_N_EXACT)?;
            let report = run_verify(&opts);
            let first = report.first_failure();
            let emitted = emit(output::Document::Verify(report))?;
            Ok(match first {
                None => Outcome::Success(emitted),
                Some(first_failure) => Outcome::InvariantFailure { emitted, first_failure },
            })
        }
        Command::ContractA(c) => {
            bound(&c.n, MAX_N_FLOAT)?;
            let r = contract_a(c.q, &c.c, c.j, &c.n)?;
            Ok(Outcome::Success(emit(output::Document::Contraction(r))?))
        }
        Command::ContractB(c) => {
            bound(&c.n, MAX_N_FLOAT)?;
            let r = contract_b(c.m, &c.a, &c.b, c.j, c.q, c.k, &c.n)?;
            Ok(Outcome::Success(emit(output::Document::Contraction(r))?))
        }
        Command::GfCheck(g) => {
            bound(&g.n, MAX_N_FLOAT)?;
            let r = contract_gf_check(g.q, &g.c, g.eta.to_f64(), &g.n)?;
            Ok(Outcome::Success(emit(output::Document::Contraction(r))?))
        }
    }
}

/// Resolved output location for a command.
pub fn default_out_path(command: &str, format: Format) -> PathBuf {
    let dir = std::env::var_os(OUT_DIR_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("."));
    dir.join(format!("{command}.{}", format.extension()))
}

pub(crate) fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
