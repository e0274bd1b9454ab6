use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "asym-plane",
    version,
    about = "Plane elasticity with an asymmetric shear modulus",
    args_override_self = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample stresses and displacements around the hole on a polar grid (CSV).
    Kirsch(KirschArgs),
    /// Run the finite-difference residual checks and write a JSON report.
    Verify(VerifyArgs),
    /// Tabulate boundary displacement amplitudes over a sweep of mu or mu0 (CSV).
    Limits(LimitsArgs),
    /// Convert one strain (or stress) state and print the constitutive matrices (JSON).
    Constitutive(ConstitutiveArgs),
}

/// Elastic moduli; exactly one of `--lambda` and `--lambda0 = lambda + mu`.
#[derive(Debug, Clone, Args)]
pub struct ModuliArgs {
    #[arg(
        long,
        allow_negative_numbers = true,
        conflicts_with = "lambda0",
        required_unless_present = "lambda0"
    )]
    pub lambda: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda0: Option<f64>,
    /// Required except in a sweep over mu.
    #[arg(long, allow_negative_numbers = true)]
    pub mu: Option<f64>,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub mu0: f64,
}

#[derive(Debug, Clone, Args)]
pub struct ProblemArgs {
    /// Remote tension along x.
    #[arg(long, allow_negative_numbers = true, default_value_t = 1.0)]
    pub p: f64,
    /// Hole radius R.
    #[arg(long, default_value_t = 1.0)]
    pub radius: f64,
    #[command(flatten)]
    pub moduli: ModuliArgs,
    /// JSON file with Laurent coefficients of phi and psi, replacing the hole
    /// potentials; the hole radius then only marks the excluded disc.
    #[arg(long)]
    pub potentials: Option<PathBuf>,
    /// Read angle arguments in degrees instead of radians.
    #[arg(long)]
    pub degrees: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
}

#[derive(Debug, Args)]
pub struct KirschArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Smallest radius (defaults to R).
    #[arg(long)]
    pub rmin: Option<f64>,
    /// Largest radius (defaults to 5R).
    #[arg(long)]
    pub rmax: Option<f64>,
    #[arg(long, default_value_t = 50)]
    pub nr: usize,
    #[arg(long, default_value_t = 36)]
    pub ntheta: usize,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub theta_start: f64,
    /// End of the angular range, exclusive (defaults to a full turn).
    #[arg(long, allow_negative_numbers = true)]
    pub theta_end: Option<f64>,
    /// Output file; `-` or absent writes to stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Coarsest step as a fraction of R; halved twice for the order estimate.
    #[arg(long, default_value_t = 1e-2)]
    pub h: f64,
    /// Coarsest biharmonic step as a fraction of R (defaults to max(h, 0.01)).
    #[arg(long)]
    pub h_biharmonic: Option<f64>,
    #[arg(long, default_value_t = 36)]
    pub ntheta: usize,
    /// Bound on each normalized residual.
    #[arg(long, default_value_t = 1e-3)]
    pub tol: f64,
    /// Plant a defect into one field (s12, trace, airy, e11, harmonic, displacement).
    #[arg(long)]
    pub corrupt: Option<String>,
    /// Report file; `-` or absent writes to stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepParam {
    Mu,
    Mu0,
}

#[derive(Debug, Args)]
pub struct LimitsArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long, value_enum)]
    pub sweep: SweepParam,
    /// Explicit comma-separated values.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, conflicts_with_all = ["from", "to", "count"])]
    pub values: Option<Vec<f64>>,
    /// Log-spaced sweep start.
    #[arg(long, requires_all = ["to", "count"])]
    pub from: Option<f64>,
    #[arg(long)]
    pub to: Option<f64>,
    #[arg(long)]
    pub count: Option<usize>,
    /// Boundary angle at which u_r and u_theta are reported.
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub theta: f64,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ConstitutiveArgs {
    #[command(flatten)]
    pub moduli: ModuliArgs,
    /// Strain components e11,e12,e22.
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        conflicts_with = "stress",
        required_unless_present = "stress"
    )]
    pub strain: Option<Vec<f64>>,
    /// Stress components s11,s12,s22.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub stress: Option<Vec<f64>>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}
