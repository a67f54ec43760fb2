use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug, Clone, PartialEq, Eq)]
#[command(
    name = "bertini",
    version,
    about = "Exact branch-curve construction and verification"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Seed coefficients in ascending order, integers or p/q, comma separated.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub poly: Option<String>,

    /// Largest prime sampled for the Galois certificate.
    #[arg(long, global = true, default_value_t = 500)]
    pub prime_bound: u64,

    /// Lattice degree (1 or 2).
    #[arg(long, global = true, default_value_t = 1)]
    pub d: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Emit u, v, w and Q for a seed.
    Construct,
    /// Full verification: curve checks, general position and Galois certificate.
    Verify,
    /// General-position checks only.
    Position,
    /// Galois certificate only.
    Galois,
    /// Lattice and mod-2 checks.
    Lattice,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Construct => "construct",
            Command::Verify => "verify",
            Command::Position => "position",
            Command::Galois => "galois",
            Command::Lattice => "lattice",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}
