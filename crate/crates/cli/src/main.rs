//! `geoment`: build states, measure single-qubit entanglement, sweep family
//! parameters and run the verification suite.
//!
//! Exit codes: 0 success, 1 a check or claim failed, 2 usage or input error.

mod commands;
mod format;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepFamily {
    Ghz,
    WernerSymmetric,
    Dicke,
}

#[derive(Debug, Parser)]
#[command(name = "geoment", version, about = "Geometric entanglement of one qubit with the rest of a pure state")]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
    /// Tolerance for oracle and prediction checks
    #[arg(long, global = true, default_value_t = 1e-6)]
    pub tol: f64,
    /// Significant digits for printed reals
    #[arg(long, global = true, default_value_t = 12)]
    pub digits: usize,
    /// Seed for generated corpora
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a family state and write it as a state file
    State {
        /// Family spec: werner:c1,..,cn | dicke:n,k | ghz:n,c1 | sin:n | cos:n
        spec: String,
        /// Output path (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Print the nonzero amplitudes as kets
        #[arg(long)]
        pretty: bool,
    },
    /// Per-qubit entanglement of a family spec or a state file
    Measure {
        /// Family spec or path to a state file
        source: String,
        /// Estimator to report
        #[arg(long, default_value = "closed-form")]
        method: String,
        /// Also run every registered estimator and compare
        #[arg(long)]
        check_oracles: bool,
    },
    /// Sweep a family parameter and emit one CSV row per value
    Sweep {
        #[arg(value_enum)]
        family: SweepFamily,
        /// Qubit count
        #[arg(long)]
        n: usize,
        /// Number of |c_1|^2 values (ghz, werner-symmetric)
        #[arg(long, default_value_t = 21)]
        steps: usize,
        /// First |c_1|^2 value
        #[arg(long, default_value_t = 0.0)]
        from: f64,
        /// Last |c_1|^2 value
        #[arg(long, default_value_t = 1.0)]
        to: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run every verification claim
    Verify {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
