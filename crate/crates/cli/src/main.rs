use std::process::ExitCode;

use clap::Parser;
use nuvarov_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => ExitCode::from(outcome.exit_code()),
        Err(e) => {
            eprintln!("nuvarov: {e}");
            ExitCode::from(CliError::EXIT_CODE)
        }
    }
}
