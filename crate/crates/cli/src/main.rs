//! `mixable`: construct, verify and analyze exact mixing sequences.
//!
//! Every command prints one JSON command report on stdout:
//! `{"command", "inputs", "result", "status"}`. Exit status 0 means the
//! requested property was established, 1 means it was checked and does not
//! hold, 2 means the command could not run.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "mixable", version, about = "Exact uniform random subproducts on finite groups")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Arithmetic for verification: exact or numeric (default: exact unless
    /// a probability is decimal)
    #[arg(long, global = true)]
    pub mode: Option<String>,
    /// Numeric tolerance on the deviation from uniform
    #[arg(long, global = true, default_value = "1e-9")]
    pub tol: String,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Seed for the sampler
    #[arg(long, global = true, default_value_t = commands::DEFAULT_SEED)]
    pub seed: u64,
    /// Largest group order any command will enumerate
    #[arg(long = "enum-bound", global = true, default_value_t = mixable::DEFAULT_ENUM_BOUND)]
    pub enum_bound: u128,
    /// Single-line JSON output
    #[arg(long, global = true)]
    pub compact: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build and certify a mixing sequence for a family
    Construct(commands::ConstructArgs),
    /// Verify a sequence document exactly or numerically
    Verify(commands::VerifyArgs),
    /// Structure report: U(G), odd quotient, involution series
    Analyze(commands::AnalyzeArgs),
    /// Grid search for minimal sequences, or certify that none exist
    Search(commands::SearchArgs),
    /// Mix an explicit matrix representation
    RepMix(commands::RepMixArgs),
    /// Monte Carlo sample of a sequence's random subproduct
    Sample(commands::SampleArgs),
    /// Constructed lengths against closed-form bounds over a range
    Table(commands::TableArgs),
    /// Implications between GL, SL, PGL and PSL over F_q
    MatrixStatus(commands::MatrixStatusArgs),
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let code = commands::run(&cli, &argv[1..]);
    ExitCode::from(code)
}
