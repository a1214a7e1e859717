//! `dompoly`: compute domination polynomials, verify the recurrence and
//! closed-form identities against the brute-force oracle, dump domination
//! roots, render limit-of-roots classifications, and collect numerical
//! evidence for the open questions.
//!
//! Exit codes: 0 success, 2 usage, 3 enumeration capacity exceeded,
//! 4 input parse error, 5 numerical failure (root non-convergence),
//! 1 anything else.

mod commands;
mod svg;

use clap::{Parser, Subcommand};
use thiserror::Error;

pub use commands::evidence::EvidenceQuestion;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Capacity(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Numeric(String),
    #[error("{0}")]
    Failed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Capacity(_) => 3,
            CliError::Parse(_) => 4,
            CliError::Numeric(_) => 5,
            CliError::Failed(_) | CliError::Io(_) => 1,
        }
    }
}

impl From<dompoly::families::FamilyError> for CliError {
    fn from(e: dompoly::families::FamilyError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<dompoly::domset::DomsetError> for CliError {
    fn from(e: dompoly::domset::DomsetError) -> Self {
        match e {
            dompoly::domset::DomsetError::CapacityExceeded { .. } => {
                CliError::Capacity(e.to_string())
            }
            dompoly::domset::DomsetError::Graph(_) => CliError::Usage(e.to_string()),
        }
    }
}

impl From<dompoly::graph::EdgeListError> for CliError {
    fn from(e: dompoly::graph::EdgeListError) -> Self {
        CliError::Parse(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "dompoly",
    version,
    about = "Domination polynomials: exact computation, theorem verification, and root analysis"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the domination polynomial of a family member or edge-list graph.
    Poly(commands::poly::PolyArgs),
    /// Re-verify the recurrence and closed-form identities against the oracle.
    Verify(commands::verify::VerifyArgs),
    /// Compute domination roots across a family range, to CSV (and SVG).
    Roots(commands::roots::RootsArgs),
    /// Classify a complex-plane grid by the limit-of-roots conditions.
    Limits(commands::limits::LimitsArgs),
    /// Tabulate numerical evidence for the open questions and conjectures.
    Evidence(commands::evidence::EvidenceArgs),
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Poly(args) => commands::poly::run(args),
        Command::Verify(args) => commands::verify::run(args),
        Command::Roots(args) => commands::roots::run(args),
        Command::Limits(args) => commands::limits::run(args),
        Command::Evidence(args) => commands::evidence::run(args),
    }
}
