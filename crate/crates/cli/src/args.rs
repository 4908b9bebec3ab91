use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ndegree::sweep::{AxisName, AxisValues, Quantity};

/// Vertex angles, critical degrees and areas of triangles whose sides obey
/// a^n + b^n = c^n for real n.
#[derive(Debug, Parser)]
#[command(name = "ndegree", version, allow_negative_numbers = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Band around |cos θ| = 1 that is clamped instead of excluded
    /// [env: NDEGREE_TOL_DOMAIN].
    #[arg(long, global = true, value_name = "TOL")]
    pub tol_domain: Option<f64>,

    /// Residual tolerance for the critical-degree bisection
    /// [env: NDEGREE_TOL_ROOT].
    #[arg(long, global = true, value_name = "TOL")]
    pub tol_root: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertex angle between legs a and b = γa.
    Angle {
        #[command(flatten)]
        point: Point,
        /// Print radians instead of degrees.
        #[arg(long, conflicts_with = "degrees")]
        radians: bool,
        /// Print degrees (the default).
        #[arg(long)]
        degrees: bool,
        /// Accept 0 < γ < 1 via the reciprocal ratio.
        #[arg(long)]
        excluded_regime: bool,
    },
    /// Critical degree bounding the real domain for n < 0.
    Ncrit {
        #[arg(long, allow_hyphen_values = true)]
        gamma: f64,
        /// Same as --tol-root.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Triangle area at a fixed leg or a fixed perimeter.
    Area {
        #[command(flatten)]
        point: Point,
        /// Length of the leg a.
        #[arg(
            long,
            required_unless_present = "perimeter",
            conflicts_with = "perimeter"
        )]
        a: Option<f64>,
        /// Total perimeter a + b + c.
        #[arg(long)]
        perimeter: Option<f64>,
    },
    /// Tabulate a quantity over a grid. Axes are `lo:hi:steps` or a single value.
    Sweep(SweepArgs),
    /// Check every published claim against independent oracles.
    Verify {
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        /// Expected statuses; defaults to the file shipped with the library.
        #[arg(long, value_name = "PATH")]
        expectations: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct Point {
    /// Side ratio γ = b/a.
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: f64,
    /// Degree n.
    #[arg(long, allow_hyphen_values = true)]
    pub n: f64,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Regenerate the data behind figure N (2-19).
    #[arg(long, value_name = "N", conflicts_with_all = ["quantity", "gamma", "n", "major"])]
    pub figure: Option<u8>,

    /// angle, area_fixed_leg, area_fixed_perimeter or ncrit.
    #[arg(long, value_parser = parse_quantity, required_unless_present = "figure")]
    pub quantity: Option<Quantity>,

    /// Side ratio axis, e.g. 1:10:200.
    #[arg(long, value_parser = parse_axis, allow_hyphen_values = true, required_unless_present = "figure")]
    pub gamma: Option<AxisValues>,

    /// Degree axis, e.g. -30:-0.1:150 (omitted for ncrit).
    #[arg(long, value_parser = parse_axis, allow_hyphen_values = true)]
    pub n: Option<AxisValues>,

    /// Axis that varies slowest in the output.
    #[arg(long, value_parser = parse_axis_name)]
    pub major: Option<AxisName>,

    /// Leg length for area_fixed_leg.
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,

    /// Perimeter for area_fixed_perimeter.
    #[arg(long, default_value_t = 1.0)]
    pub perimeter: f64,

    #[arg(long)]
    pub radians: bool,

    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

fn parse_quantity(s: &str) -> Result<Quantity, String> {
    s.parse().map_err(|e: ndegree::Error| e.to_string())
}

fn parse_axis(s: &str) -> Result<AxisValues, String> {
    s.parse().map_err(|e: ndegree::Error| e.to_string())
}

fn parse_axis_name(s: &str) -> Result<AxisName, String> {
    s.parse().map_err(|e: ndegree::Error| e.to_string())
}
