use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use homlie_cli::commands::{run, Command};

/// Exact-arithmetic checker and constructor for structure-constant
/// documents: algebras with a twisted Jacobi identity, representations,
/// bracket pairs, Manin triples, Yang-Baxter bivectors, and the operators
/// that produce them.
///
/// Exit codes: 0 when every check passes, 1 when a check fails, 2 on input
/// or precondition errors.
#[derive(Parser)]
#[command(name = "homlie", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit the machine-readable JSON report instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Write the constructed document to this file
    #[arg(short, long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli.command) {
        Ok(outcome) => outcome,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    };
    if let Some(path) = &cli.output {
        let Some(doc) = &outcome.primary else {
            eprintln!("error: this command does not construct a document");
            return ExitCode::from(2);
        };
        if let Err(err) = std::fs::write(path, doc.to_canonical_string()) {
            eprintln!("error: cannot write {}: {err}", path.display());
            return ExitCode::from(2);
        }
    }
    if let Command::BuildR {
        algebra_out: Some(path),
        ..
    } = &cli.command
    {
        let Some(doc) = &outcome.secondary else {
            unreachable!("build-r always constructs the double");
        };
        if let Err(err) = std::fs::write(path, doc.to_canonical_string()) {
            eprintln!("error: cannot write {}: {err}", path.display());
            return ExitCode::from(2);
        }
    }
    if cli.json {
        print!("{}", outcome.report.to_json_string());
    } else {
        print!("{}", outcome.report.to_text());
    }
    ExitCode::from(u8::try_from(outcome.report.exit_code).unwrap_or(1))
}
