use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nuvarov_core::Branch;

fn finite(raw: &str) -> Result<f64, String> {
    let v: f64 = raw.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{raw} is not a finite number"))
    }
}

#[derive(Debug, Parser)]
#[command(name = "nuvarov", version, about = "Bound states of exponential-mass and Morse problems, with an independent finite-difference check")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form Case I / Case II levels of the exponential-mass model.
    PdmSpectrum {
        #[command(flatten)]
        model: PdmArgs,
        #[arg(long, default_value_t = 5)]
        levels: usize,
        /// Restrict to one branch (I or II).
        #[arg(long)]
        case: Option<Branch>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Sampled wavefunction of one exponential-mass level.
    PdmWavefunction {
        #[command(flatten)]
        model: PdmArgs,
        #[arg(long, default_value_t = 0)]
        level: usize,
        #[arg(long, default_value = "II")]
        case: Branch,
        #[command(flatten)]
        sampling: SamplingArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Closed-form Morse levels.
    MorseSpectrum {
        #[command(flatten)]
        model: MorseArgs,
        #[arg(long, default_value_t = 10)]
        levels: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Sampled wavefunction of one Morse level.
    MorseWavefunction {
        #[command(flatten)]
        model: MorseArgs,
        #[arg(long, default_value_t = 0)]
        level: usize,
        #[command(flatten)]
        sampling: SamplingArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Exponential-mass levels found by bisecting the NU quantization condition.
    NuSolve {
        #[command(flatten)]
        model: PdmArgs,
        #[arg(long, default_value_t = 5)]
        levels: usize,
        #[arg(long)]
        case: Option<Branch>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compare exponential-mass levels with the radial finite-difference oracle.
    VerifyPdm {
        #[command(flatten)]
        model: PdmArgs,
        #[arg(long, default_value_t = 3)]
        levels: usize,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compare Morse levels with the finite-difference oracle.
    VerifyMorse {
        #[command(flatten)]
        model: MorseArgs,
        #[arg(long, default_value_t = 10)]
        levels: usize,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Map a Morse level onto the exponential-mass model and look for the matching level.
    Map {
        #[command(flatten)]
        model: MorseArgs,
        #[command(flatten)]
        ambiguity: AmbiguityArgs,
        #[arg(long, default_value_t = 0)]
        level: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct AmbiguityArgs {
    #[arg(long, default_value_t = 0.0, value_parser = finite, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = -1.0, value_parser = finite, allow_hyphen_values = true)]
    pub beta: f64,
    #[arg(long, default_value_t = 0.5, value_parser = finite, allow_hyphen_values = true)]
    pub eta: f64,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct PdmArgs {
    /// Mass decay rate in m(x) = exp(-2 lambda x).
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub lambda: f64,
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub v0: f64,
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub b: f64,
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub a: f64,
    #[command(flatten)]
    pub ambiguity: AmbiguityArgs,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct MorseArgs {
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub v1: f64,
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub v2: f64,
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub alpha_star: f64,
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub mass: f64,
    #[arg(long, default_value_t = 1.0, value_parser = finite, allow_hyphen_values = true)]
    pub hbar: f64,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct SamplingArgs {
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub xlo: Option<f64>,
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub xhi: Option<f64>,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct GridArgs {
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub xlo: Option<f64>,
    #[arg(long, value_parser = finite, allow_hyphen_values = true)]
    pub xhi: Option<f64>,
    /// Interior points of the finest grid.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 1e-3, value_parser = finite)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}
