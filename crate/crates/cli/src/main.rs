mod args;
mod commands;
mod potentials_file;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// Reasons the tool stops, each with its exit status.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or input files (exit 2).
    Input(String),
    /// A point or stencil outside the domain of definition (exit 3).
    Domain(String),
    /// At least one residual check failed (exit 1); the report was written.
    Verification,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification => 1,
            Failure::Input(_) => 2,
            Failure::Domain(_) => 3,
        }
    }
}

impl From<asym_plane::Error> for Failure {
    fn from(e: asym_plane::Error) -> Self {
        match e {
            asym_plane::Error::Domain(_) => Failure::Domain(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Kirsch(a) => commands::kirsch(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Limits(a) => commands::limits(&a),
        Command::Constitutive(a) => commands::constitutive(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Input(msg) | Failure::Domain(msg) => eprintln!("error: {msg}"),
                Failure::Verification => eprintln!("verification failed"),
            }
            ExitCode::from(f.code())
        }
    }
}
