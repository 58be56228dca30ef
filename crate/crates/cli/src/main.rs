//! `coxeter`: command-line access to the finite Coxeter group engine.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coxeter_core::{CoxeterError, CoxeterType, DEFAULT_BUDGET};

#[derive(Parser, Debug)]
#[command(name = "coxeter", version, about = "Exact computations in finite Coxeter groups")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Output format.
    #[arg(long, short, global = true, value_enum, default_value_t = Output::Text)]
    pub output: Output,
    /// Largest group order that will be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    /// Directory for cached class tables.
    #[arg(long, global = true, env = "COXETER_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Output {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Order, rank, Coxeter matrix and number of positive roots.
    GroupInfo { group: CoxeterType },
    /// All conjugacy classes with their minimal representatives.
    Classes { group: CoxeterType },
    /// Centralizer complement for one class.
    Complement {
        group: CoxeterType,
        /// Classical class label, e.g. "(1),(2,2)".
        #[arg(long, conflicts_with = "class")]
        lambda: Option<String>,
        /// Class index, "identity", "coxeter", or a word such as "1 2 1".
        #[arg(long, required_unless_present = "lambda")]
        class: Option<String>,
    },
    /// Solomon's alternating sum of permutation characters.
    Solomon {
        group: CoxeterType,
        /// Random elements checked in addition to the class representatives.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// MacMahon master theorem and Merris–Watkins coefficients in S_n.
    Macmahon {
        #[arg(value_parser = clap::value_parser!(u64).range(1..=6))]
        n: u64,
        /// Check this many random permutations instead of all of them.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Descent and ascent characterization of the longest element of J(w).
    #[command(name = "theorem3")]
    LongestWitness { group: CoxeterType },
}

/// Outcome of a command, mapped to the process exit code.
pub enum Status {
    Pass,
    Violation,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Violation) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CoxeterError::BudgetExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
