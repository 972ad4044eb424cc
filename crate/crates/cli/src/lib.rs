//! Command-line front end: spectra, sampled wavefunctions and oracle
//! verification reports as JSON or CSV.

mod args;
mod commands;
mod output;

use thiserror::Error;

pub use args::{Cli, Command, Format};
pub use commands::{run, Outcome};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("cannot write output: {0}")]
    Output(String),
}

impl CliError {
    pub const EXIT_CODE: u8 = 2;
}
