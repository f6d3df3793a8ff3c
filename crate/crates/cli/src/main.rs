//! `borderidx`: borders, index tables and index generating functions of
//! finite monomial order ideals.
//!
//! Exit codes: 0 success, 2 parse or usage error, 3 invalid order ideal,
//! 4 verification failure.

mod commands;
mod render;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::commands::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Matrix,
    Latex,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Enlarged bounding-box decomposition (any dimension).
    Box,
    /// Four-part sum over the partition (dimension 2 only).
    #[value(name = "2d")]
    TwoD,
}

#[derive(Debug, Parser)]
#[command(
    name = "borderidx",
    version,
    about = "Index generating functions of monomial order ideals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the index table of an order ideal over a box.
    Index {
        #[arg(long)]
        input: PathBuf,
        /// Box corner, e.g. 7,7
        #[arg(long)]
        bounds: String,
        #[arg(long, value_enum, default_value = "matrix")]
        format: Format,
    },
    /// Print the k-th border of an order ideal.
    Border {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compute the index generating function.
    Gf {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "box")]
        method: Method,
        /// Compare the series with the index table on this box.
        #[arg(long)]
        verify_bounds: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Closed form of P_n(x; a; b) = Σ (a·α + b) x^α.
    Pn {
        /// Comma-separated rationals a_1,…,a_n (omit for n = 0).
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Compare the closed form with the series oracles on this box.
        #[arg(long)]
        check_bounds: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the enlarged-box decomposition, or check a supplied one.
    Decompose {
        #[arg(long)]
        input: PathBuf,
        /// Decomposition JSON to validate instead of the built-in one.
        #[arg(long)]
        check: Option<PathBuf>,
        /// Box for the exhaustive admissibility test.
        #[arg(long)]
        sample_bounds: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Verify an ideal's generating function, or run a seeded random sweep
    /// (seed from BORDERIDX_SEED) when no input is given.
    Verify {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        bounds: Option<String>,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let mut argv: Vec<String> = std::env::args().collect();
    if let Some(program) = argv.first_mut() {
        *program = "borderidx".into();
    }
    let cli = Cli::parse();
    match commands::run(&cli.command, &argv) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if outcome.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(4)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(match err {
                CliError::Parse(_) => 2,
                CliError::InvalidIdeal(_) => 3,
            })
        }
    }
}
