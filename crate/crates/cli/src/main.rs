//! `pathenergy` command-line tool.
//!
//! Exit codes: 0 success, 1 mathematical violation, 2 input or usage error,
//! 3 conjecture counterexample under `scan --fail-on-counterexample`.

mod compute;
mod families;
mod oracle;
mod output;
mod scan;
mod source;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "pathenergy", version, about = "Path matrices, path spectra and path energies of simple graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Path matrix, path spectrum, path energy and adjacency energy of one graph.
    Compute(compute::ComputeArgs),
    /// Evaluate every path-energy bound on one graph; exit 1 on a violation.
    Verify(compute::VerifyArgs),
    /// Scan a stream of graph6 lines and summarise positive path eigenvalues.
    Scan(scan::ScanArgs),
    /// Compare closed-form family spectra with numerically computed ones.
    Families(families::FamiliesArgs),
    /// Cross-check max-flow path counts against exhaustive search.
    OracleCheck(oracle::OracleArgs),
}

/// Successful outcomes, mapped to exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Violation,
    Counterexample,
}

/// Input, usage or I/O failure (exit code 2).
#[derive(Debug)]
pub struct CliError(pub String);

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError(e.to_string())
    }
}

impl From<pathenergy::Error> for CliError {
    fn from(e: pathenergy::Error) -> Self {
        CliError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute(a) => compute::run_compute(&a),
        Command::Verify(a) => compute::run_verify(&a),
        Command::Scan(a) => scan::run(&a),
        Command::Families(a) => families::run(&a),
        Command::OracleCheck(a) => oracle::run(&a),
    };
    match outcome {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Violation) => ExitCode::from(1),
        Ok(Status::Counterexample) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
