use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{CliError, CliResult};

pub const DEFAULT_ROTATION_ANGLES: [f64; 7] = [0.0, 20.0, 30.0, 45.0, 70.0, 80.0, 180.0];

#[derive(Debug, Parser)]
#[command(
    name = "approx",
    version,
    about = "Polygonal approximation of closed digital curves",
    args_conflicts_with_subcommands = true,
    subcommand_negates_reqs = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Regenerate a benchmark table from a fixture directory.
    Bench(BenchArgs),
    /// Approximate rotated copies of a curve and tabulate shape metrics.
    Rotate(RotateArgs),
}

/// Arguments of the default (approximate) command.
#[derive(Debug, Args)]
pub struct RunArgs {
    /// Curve text file, or a PBM/PGM mask whose largest blob is traced.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Target number of dominant points.
    #[arg(long, conflicts_with = "max_ise")]
    pub points: Option<usize>,
    /// Error budget: eliminate while the integral square error stays within it.
    #[arg(long)]
    pub max_ise: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Also run a baseline method on the same curve.
    #[arg(long, value_enum)]
    pub baseline: Option<Baseline>,
    /// Also report approximations of rotated copies (degrees, comma separated).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub angles: Option<Vec<f64>>,
    /// Include the per-step elimination trace.
    #[arg(long)]
    pub trace: bool,
    /// Write here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub fixtures: PathBuf,
    #[arg(long, value_enum)]
    pub table: Table,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RotateArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub points: usize,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub angles: Option<Vec<f64>>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Baseline {
    Rdp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Table {
    Synthetic,
    Mpeg,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Target {
    Points(usize),
    MaxIse(f64),
}

/// Validated form of [`RunArgs`].
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub input: PathBuf,
    pub target: Target,
    pub format: Format,
    pub baseline: Option<Baseline>,
    pub angles: Option<Vec<f64>>,
    pub trace: bool,
    pub output: Option<PathBuf>,
}

fn check_points(m: usize) -> CliResult<usize> {
    if m < polyapprox::approximator::MIN_POLYGON {
        return Err(CliError::Usage(
            polyapprox::Error::TargetTooSmall { m }.to_string(),
        ));
    }
    Ok(m)
}

fn check_angles(angles: &Option<Vec<f64>>) -> CliResult<()> {
    match angles {
        Some(a) if a.is_empty() || a.iter().any(|x| !x.is_finite()) => Err(CliError::Usage(
            "--angles needs a list of finite numbers".into(),
        )),
        _ => Ok(()),
    }
}

impl RunArgs {
    pub fn validate(self) -> CliResult<RunConfig> {
        let input = self
            .input
            .ok_or_else(|| CliError::Usage("--input is required".into()))?;
        let target = match (self.points, self.max_ise) {
            (Some(m), None) => Target::Points(check_points(m)?),
            (None, Some(e)) if e.is_finite() && e >= 0.0 => Target::MaxIse(e),
            (None, Some(e)) => {
                return Err(CliError::Usage(format!(
                    "--max-ise must be a finite non-negative number (got {e})"
                )))
            }
            _ => {
                return Err(CliError::Usage(
                    "exactly one of --points or --max-ise is required".into(),
                ))
            }
        };
        check_angles(&self.angles)?;
        Ok(RunConfig {
            input,
            target,
            format: self.format,
            baseline: self.baseline,
            angles: self.angles,
            trace: self.trace,
            output: self.output,
        })
    }
}

impl RotateArgs {
    pub fn validate(self) -> CliResult<(PathBuf, usize, Vec<f64>, Option<PathBuf>)> {
        let m = check_points(self.points)?;
        check_angles(&self.angles)?;
        let angles = self
            .angles
            .unwrap_or_else(|| DEFAULT_ROTATION_ANGLES.to_vec());
        Ok((self.input, m, angles, self.output))
    }
}
