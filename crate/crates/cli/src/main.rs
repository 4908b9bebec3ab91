mod args;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use ndegree::figures::{figure_sweep, FIGURES};
use ndegree::sweep::{AngleUnit, OutputFormat};
use ndegree::tolerance::{ENV_DOMAIN_TOL, ENV_ROOT_TOL};
use ndegree::verify::Expectations;
use ndegree::{
    area_fixed_leg, area_fixed_perimeter, fmt_g17, run_claims_report, solve_ncrit,
    vertex_angle_with, AngleOutcome, Degree, Error, Exclusion, SideRatio, SweepSpec, Tolerances,
};

use args::{Cli, Command, Point, ReportFormat, SweepArgs, TableFormat};

const USAGE: u8 = 1;
const EXCLUDED: u8 = 2;
const MISMATCH: u8 = 3;

/// Why a command did not exit 0.
enum Failure {
    Usage(String),
    /// Message already printed on standard output.
    Excluded,
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(USAGE),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
        Err(Failure::Excluded) => ExitCode::from(EXCLUDED),
        Err(Failure::Mismatch) => ExitCode::from(MISMATCH),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let defaults = Tolerances::default();
    let tol = Tolerances::new(
        tolerance(cli.tol_domain, ENV_DOMAIN_TOL, defaults.domain)?,
        tolerance(cli.tol_root, ENV_ROOT_TOL, defaults.root)?,
    )?;
    match cli.command {
        Command::Angle {
            point,
            radians,
            excluded_regime,
            ..
        } => angle(point, radians, excluded_regime, tol),
        Command::Ncrit { gamma, tol: root } => {
            let tol = match root {
                Some(r) => Tolerances::new(tol.domain, r)?,
                None => tol,
            };
            ncrit(gamma, tol)
        }
        Command::Area {
            point,
            a,
            perimeter,
        } => area(point, a, perimeter, tol),
        Command::Sweep(args) => sweep(args, tol),
        Command::Verify {
            format,
            expectations,
        } => {
            let expected = match expectations {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    Expectations::from_json(&text)?
                }
                None => Expectations::bundled(),
            };
            verify(format, &expected)
        }
    }
}

/// Flag, then environment, then default. The environment is not read when
/// the flag is given.
fn tolerance(flag: Option<f64>, var: &str, default: f64) -> Result<f64, Failure> {
    if let Some(t) = flag {
        return Ok(t);
    }
    match std::env::var(var) {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{var}={text:?} is not a number"))),
        Err(_) => Ok(default),
    }
}

/// Prints the exclusion, naming the critical degree when it is the cause.
fn excluded(gamma: SideRatio, e: Exclusion, tol: Tolerances) -> Failure {
    let root = match e {
        Exclusion::ExceedsCriticalDegree => SideRatio::new(gamma.canonical())
            .and_then(|g| solve_ncrit(g, tol.root))
            .ok(),
        _ => None,
    };
    match root {
        Some(c) => println!("excluded: {e} (n_crit ≈ {})", fmt_g17(c.n_crit)),
        None => println!("excluded: {e}"),
    }
    Failure::Excluded
}

fn angle(point: Point, radians: bool, below_one: bool, tol: Tolerances) -> Result<(), Failure> {
    let gamma = if below_one {
        SideRatio::excluded_regime(point.gamma)?
    } else {
        SideRatio::new(point.gamma)?
    };
    let n = Degree::new(point.n)?;
    match vertex_angle_with(gamma, n, tol.domain) {
        AngleOutcome::Real { theta, .. } => {
            println!(
                "{}",
                fmt_g17(if radians { theta } else { theta.to_degrees() })
            );
            Ok(())
        }
        AngleOutcome::Excluded(e) => Err(excluded(gamma, e, tol)),
    }
}

fn ncrit(gamma: f64, tol: Tolerances) -> Result<(), Failure> {
    let gamma = SideRatio::new(gamma)?;
    match solve_ncrit(gamma, tol.root) {
        Ok(c) => {
            println!("n_crit = {}", fmt_g17(c.n_crit));
            println!("residual = {}", fmt_g17(c.residual));
            Ok(())
        }
        Err(Error::NoCriticalDegree) => {
            println!("no critical degree (all n<0 valid)");
            Err(Failure::Excluded)
        }
        Err(Error::RatioAtLeastTwo(_)) => Err(excluded(gamma, Exclusion::RatioAtLeastTwo, tol)),
        Err(e) => Err(e.into()),
    }
}

fn area(
    point: Point,
    a: Option<f64>,
    perimeter: Option<f64>,
    tol: Tolerances,
) -> Result<(), Failure> {
    let gamma = SideRatio::new(point.gamma)?;
    let n = Degree::new(point.n)?;
    let value = match (a, perimeter) {
        (Some(a), None) => area_fixed_leg(a, gamma, n),
        (None, Some(p)) => area_fixed_perimeter(p, gamma, n),
        _ => {
            return Err(Failure::Usage(
                "exactly one of --a and --perimeter is required".into(),
            ))
        }
    };
    match value {
        Ok(v) => {
            println!("{}", fmt_g17(v.area));
            Ok(())
        }
        Err(Error::Excluded(e)) => Err(excluded(gamma, e, tol)),
        Err(Error::FractionalDegree(_)) => {
            Err(excluded(gamma, Exclusion::FractionalPositiveDegree, tol))
        }
        Err(e) => Err(e.into()),
    }
}

fn sweep(args: SweepArgs, tol: Tolerances) -> Result<(), Failure> {
    let mut spec = match args.figure {
        Some(f) => figure_sweep(f).ok_or_else(|| {
            Failure::Usage(format!(
                "no preset for figure {f} (available: {}-{})",
                FIGURES.start(),
                FIGURES.end()
            ))
        })?,
        None => {
            // clap enforces both unless --figure is given
            let (Some(q), Some(g)) = (args.quantity, args.gamma) else {
                return Err(Failure::Usage("--quantity and --gamma are required".into()));
            };
            let spec = SweepSpec::new(q, g, args.n);
            match args.major {
                Some(m) => spec.major(m),
                None => spec,
            }
        }
    };
    spec.a = args.a;
    spec.perimeter = args.perimeter;
    spec.tolerances = tol;
    if args.radians {
        spec.unit = AngleUnit::Radians;
    }
    let format = match args.format {
        TableFormat::Csv => OutputFormat::Csv,
        TableFormat::Json => OutputFormat::Json,
    };
    print!("{}", spec.run()?.render(format));
    Ok(())
}

fn verify(format: ReportFormat, expected: &Expectations) -> Result<(), Failure> {
    let report = run_claims_report();
    match format {
        ReportFormat::Json => println!("{}", report.to_json()),
        ReportFormat::Text => print!("{}", report.to_text()),
    }
    let mismatches = report.mismatches(expected);
    if mismatches.is_empty() {
        return Ok(());
    }
    for (id, got, want) in mismatches {
        let show =
            |s: Option<ndegree::ClaimStatus>| s.map_or("missing".to_string(), |s| s.to_string());
        eprintln!("mismatch: {id} is {}, expected {}", show(got), show(want));
    }
    Err(Failure::Mismatch)
}
