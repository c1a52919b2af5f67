//! `bwit`: build and verify witness tuples, decide stability of tuple files,
//! and compute residue certificates.
//!
//! Exit codes: 0 pass, 1 check failure, 2 usage, 3 method not applicable,
//! 4 budget exceeded.

mod quaternion;
mod stability;
mod witness;

use std::path::PathBuf;
use std::process::ExitCode;

use brauer_witness::Error;
use clap::{Parser, Subcommand};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_NOT_APPLICABLE: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "bwit", version, about = "Exact verification of Brauer-class obstructions to universal bundles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a witness tuple and run the full obstruction pipeline.
    Witness(witness::Args),
    /// Decide stability of a tuple read from a JSON file.
    Stability(stability::Args),
    /// Residue certificate (and optional bounded search) for a symbol (f, g).
    Quaternion(quaternion::Args),
}

/// Shared output options.
#[derive(clap::Args, Debug, Clone)]
pub struct Output {
    /// Write the JSON report to this path (`-` for standard output).
    #[arg(long = "json", value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Seed for randomized checks; recorded in the report.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl Output {
    pub fn emit(&self, value: &serde_json::Value) -> Result<(), u8> {
        let text = serde_json::to_string_pretty(value).expect("serializable") + "\n";
        match &self.json {
            Some(path) if path.as_os_str() == "-" => {
                print!("{}", text);
                Ok(())
            }
            Some(path) => std::fs::write(path, text).map_err(|e| {
                eprintln!("error: cannot write {}: {}", path.display(), e);
                EXIT_USAGE
            }),
            None => Ok(()),
        }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::MethodNotApplicable(_) => EXIT_NOT_APPLICABLE,
        Error::Budget { .. } => EXIT_BUDGET,
        Error::Spec(_)
        | Error::InvalidFlag(_)
        | Error::Parse { .. }
        | Error::ZeroInput(_)
        | Error::Form(_)
        | Error::Shape(_)
        | Error::NotLie(_)
        | Error::DivisionByZero => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}

pub fn report_error(e: &Error) -> u8 {
    eprintln!("error: {}", e);
    exit_code(e)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Witness(a) => witness::run(&a),
        Command::Stability(a) => stability::run(&a),
        Command::Quaternion(a) => quaternion::run(&a),
    };
    ExitCode::from(code)
}
