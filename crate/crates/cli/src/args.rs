use std::path::PathBuf;

use bohr_core::radius::RadiusConfig;
use bohr_core::suite::DEFAULT_CASES;
use bohr_core::theorems::{SectionMode, Theorem, DEFAULT_TOL};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "bohr-majorant",
    version,
    about = "Bohr operator on truncated power series and numerical checks of Bohr-type inequalities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check one inequality at one or more radii.
    Verify(VerifyArgs),
    /// Run the seeded verification suite and print a CSV summary.
    Suite(SuiteArgs),
    /// Locate the first failure radius of a check with fixed inputs.
    Radius(RadiusArgs),
    /// Scan the Möbius family for the first input that fails at a radius.
    Sharpness(SharpnessArgs),
    /// Print the truncated series of a function spec as JSON.
    Show(ShowArgs),
}

/// Function specs use the grammar `moebius:a`, `blaschke:[z1,...]@theta`,
/// `bproduct:[z1,...]@theta`, `schur:[g0,...]`, `poly:c0,c1,...`,
/// `koebe[@theta]`, `const:c`; a path to a file holding a spec or a
/// Schwarz-spec JSON object is also accepted.
#[derive(Debug, Clone, Default, Args)]
pub struct InputArgs {
    /// Function under test; same as --f.
    #[arg(long, value_name = "SPEC", conflicts_with = "f")]
    pub function: Option<String>,
    #[arg(long, value_name = "SPEC")]
    pub f: Option<String>,
    #[arg(long, value_name = "SPEC")]
    pub g: Option<String>,
    /// Outer function of the composition.
    #[arg(long, value_name = "SPEC")]
    pub h: Option<String>,
    /// Schwarz function.
    #[arg(long, value_name = "SPEC")]
    pub phi: Option<String>,
    /// Unit-bounded multiplier for quasi-subordination.
    #[arg(long, value_name = "SPEC")]
    pub psi: Option<String>,
    /// Complex scalar for the norm axioms, e.g. `0.5-2i`.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Section index.
    #[arg(long)]
    pub k: Option<usize>,
    /// Power of the Schwarz function.
    #[arg(long)]
    pub j: Option<u32>,
    /// Bound of |g| on the disk of radius rho.
    #[arg(long)]
    pub b: Option<f64>,
    #[arg(long)]
    pub rho: Option<f64>,
    /// Bound of |f| on the disk for the Bohr check (default 1).
    #[arg(long)]
    pub sup_bound: Option<f64>,
    #[arg(long)]
    pub mode: Option<SectionMode>,
}

impl InputArgs {
    pub fn is_empty(&self) -> bool {
        let s = [&self.function, &self.f, &self.g, &self.h, &self.phi, &self.psi, &self.alpha];
        s.iter().all(|x| x.is_none())
            && self.k.is_none()
            && self.j.is_none()
            && self.b.is_none()
            && self.rho.is_none()
            && self.sup_bound.is_none()
            && self.mode.is_none()
    }
}

#[derive(Debug, Clone, Copy, Args)]
pub struct PrecisionArgs {
    /// Truncation degree N.
    #[arg(long, default_value_t = 64)]
    pub degree: usize,
    /// Samples per circle for sup norms.
    #[arg(long, default_value_t = 4096)]
    pub samples: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TextFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(required_unless_present = "replay")]
    pub theorem: Option<Theorem>,
    #[command(flatten)]
    pub inputs: InputArgs,
    /// Radius; repeat or separate with commas.
    #[arg(long = "r", value_delimiter = ',')]
    pub r: Vec<f64>,
    #[command(flatten)]
    pub precision: PrecisionArgs,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "json")]
    pub format: ReportFormat,
    /// Write reports here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Re-evaluate a witness file (a case, or a report containing one).
    #[arg(long, value_name = "FILE", conflicts_with = "theorem")]
    pub replay: Option<PathBuf>,
    /// Write the witness of the first failing report (else the last report).
    #[arg(long, value_name = "FILE")]
    pub witness_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_CASES)]
    pub cases: usize,
    /// Additional radius checked for every theorem of the suite.
    #[arg(long)]
    pub r_extra: Option<f64>,
    #[command(flatten)]
    pub precision: PrecisionArgs,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Write every failing report as one JSON object per line.
    #[arg(long, value_name = "FILE")]
    pub failures_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RadiusArgs {
    pub theorem: Theorem,
    #[command(flatten)]
    pub inputs: InputArgs,
    #[command(flatten)]
    pub precision: PrecisionArgs,
    #[arg(long, default_value_t = RadiusConfig::default().r_max)]
    pub r_max: f64,
    #[arg(long, default_value_t = RadiusConfig::default().grid)]
    pub grid: usize,
    #[arg(long, default_value_t = RadiusConfig::default().bisect_tol)]
    pub bisect_tol: f64,
    /// Verdict tolerance during the search.
    #[arg(long, default_value_t = RadiusConfig::default().tol)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: TextFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Write the first failing case for replay with `verify --replay`.
    #[arg(long, value_name = "FILE")]
    pub witness_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SharpnessArgs {
    pub theorem: Theorem,
    /// Fixed inputs; the role varied by the family is overwritten.
    #[command(flatten)]
    pub inputs: InputArgs,
    #[arg(long = "r")]
    pub r: f64,
    /// Family members a = i/grid for i = 0..=grid.
    #[arg(long, default_value_t = 20)]
    pub grid: usize,
    #[command(flatten)]
    pub precision: PrecisionArgs,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: TextFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    pub witness_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ShowArgs {
    pub spec: String,
    #[arg(long, default_value_t = 64)]
    pub degree: usize,
}
