use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kg_lpt::numerov::NumerovConfig;
use kg_lpt::summation::Pairing;

/// Hard cap on the number of corrections a single run may request.
pub const MAX_ORDER: usize = 30;

#[derive(Debug, Parser)]
#[command(
    name = "kg-lpt",
    version,
    about = "Perturbative and numerical bound states of the Klein-Gordon equation with Hulthén couplings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy corrections E_0..E_K, partial sums and the averaged estimate.
    Corrections(CorrectionsArgs),
    /// Fifth-order partial sums and percentage errors over λ = 0.05..0.15 (n = 1, l = 1).
    Table1(TableArgs),
    /// Partial sums S_0..S_10 at λ = 0.05 for n = 1, 2 and l = 1.
    Table2(TableArgs),
    /// Shooting eigensolver on the closed-form potentials.
    Numerov(NumerovArgs),
    /// Exact s-wave level and its expansion in λ.
    ExactSwave(ExactArgs),
    /// Critical screening and binding threshold of s-wave levels.
    CriticalLambda(CriticalArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PairingArg {
    Consecutive,
    EvenOdd,
}

impl From<PairingArg> for Pairing {
    fn from(p: PairingArg) -> Self {
        match p {
            PairingArg::Consecutive => Pairing::Consecutive,
            PairingArg::EvenOdd => Pairing::EvenOdd,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Physics {
    /// Vector coupling strength.
    #[arg(short = 'a', default_value_t = 1.0, allow_negative_numbers = true)]
    pub a: f64,
    /// Scalar coupling strength.
    #[arg(short = 'b', default_value_t = 1.0, allow_negative_numbers = true)]
    pub b: f64,
    /// Screening parameter.
    #[arg(long, default_value_t = 0.05, allow_negative_numbers = true)]
    pub lambda: f64,
    /// Radial quantum number (number of nodes).
    #[arg(short = 'n', default_value_t = 1)]
    pub n: u32,
    /// Orbital angular momentum.
    #[arg(short = 'l', default_value_t = 1)]
    pub l: u32,
    /// Particle mass.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub mass: f64,
}

#[derive(Debug, Clone, Args)]
pub struct Grid {
    /// Numerov grid steps.
    #[arg(long, default_value_t = NumerovConfig::default().steps)]
    pub grid_steps: usize,
    /// Outer radius of the Numerov grid (default: 40 decay lengths).
    #[arg(long)]
    pub r_max: Option<f64>,
    /// Energy tolerance of the eigenvalue search.
    #[arg(long, default_value_t = NumerovConfig::default().energy_tol)]
    pub tol: f64,
}

impl Grid {
    pub fn config(&self) -> NumerovConfig {
        NumerovConfig {
            steps: self.grid_steps,
            r_max: self.r_max,
            energy_tol: self.tol,
            ..NumerovConfig::default()
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct CorrectionsArgs {
    #[command(flatten)]
    pub physics: Physics,
    /// Highest correction order K.
    #[arg(short = 'K', long = "order", default_value_t = 10)]
    pub order: usize,
    /// Pairs of partial sums the averaged estimate may use.
    #[arg(long, value_enum, default_value_t = PairingArg::Consecutive)]
    pub pairing: PairingArg,
    /// Also solve numerically and report the percentage error of S_K.
    #[arg(long)]
    pub numerov: bool,
    #[command(flatten)]
    pub grid: Grid,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    /// Skip the numerical reference column.
    #[arg(long)]
    pub no_numerov: bool,
    #[command(flatten)]
    pub grid: Grid,
}

#[derive(Debug, Clone, Args)]
pub struct NumerovArgs {
    #[command(flatten)]
    pub physics: Physics,
    #[command(flatten)]
    pub grid: Grid,
}

#[derive(Debug, Clone, Args)]
pub struct ExactArgs {
    /// Vector coupling strength.
    #[arg(short = 'a', default_value_t = 1.0, allow_negative_numbers = true)]
    pub a: f64,
    /// Scalar coupling strength.
    #[arg(short = 'b', default_value_t = 1.0, allow_negative_numbers = true)]
    pub b: f64,
    /// Screening parameter.
    #[arg(long, default_value_t = 0.05, allow_negative_numbers = true)]
    pub lambda: f64,
    /// Radial quantum number.
    #[arg(short = 'n', default_value_t = 0)]
    pub n: u32,
    /// Particle mass.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub mass: f64,
    /// Also solve numerically and report the percentage error.
    #[arg(long)]
    pub numerov: bool,
    #[command(flatten)]
    pub grid: Grid,
}

#[derive(Debug, Clone, Args)]
pub struct CriticalArgs {
    /// Vector coupling strength.
    #[arg(short = 'a', default_value_t = 1.0, allow_negative_numbers = true)]
    pub a: f64,
    /// Scalar coupling strength.
    #[arg(short = 'b', default_value_t = 1.0, allow_negative_numbers = true)]
    pub b: f64,
    /// Radial quantum number.
    #[arg(short = 'n', default_value_t = 0)]
    pub n: u32,
    /// Particle mass.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub mass: f64,
}
