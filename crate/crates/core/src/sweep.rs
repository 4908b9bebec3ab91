//! Tabulation of one quantity over a grid of side ratios and degrees.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::angle::{vertex_angle_with, Degree, SideRatio};
use crate::area::{area_fixed_leg, area_fixed_perimeter};
use crate::critical::solve_ncrit;
use crate::error::{check_length, Error, Result};
use crate::format::fmt_g17;
use crate::tolerance::Tolerances;
use crate::verify::oracles::linspace;

/// Literal written for cells outside the real domain.
pub const EXCLUDED: &str = "excluded";

/// A sweep axis: `lo:hi:steps` or a single value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AxisValues {
    Range { lo: f64, hi: f64, steps: usize },
    Scalar(f64),
}

impl AxisValues {
    pub fn values(&self) -> Vec<f64> {
        match *self {
            AxisValues::Range { lo, hi, steps } => linspace(lo, hi, steps),
            AxisValues::Scalar(x) => vec![x],
        }
    }

    pub fn is_range(&self) -> bool {
        matches!(self, AxisValues::Range { .. })
    }
}

fn parse_number(text: &str) -> Result<f64> {
    let x: f64 = text
        .trim()
        .parse()
        .map_err(|_| Error::InvalidSweep(format!("not a number: {text:?}")))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::InvalidSweep(format!("not finite: {text:?}")))
    }
}

impl FromStr for AxisValues {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [x] => Ok(AxisValues::Scalar(parse_number(x)?)),
            [lo, hi, steps] => {
                let (lo, hi) = (parse_number(lo)?, parse_number(hi)?);
                let steps: usize = steps
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidSweep(format!("bad step count in {s:?}")))?;
                if steps < 2 {
                    return Err(Error::InvalidSweep(format!(
                        "range {s:?} needs at least 2 steps (use a single value instead)"
                    )));
                }
                if lo >= hi {
                    return Err(Error::InvalidSweep(format!("range {s:?} needs lo < hi")));
                }
                Ok(AxisValues::Range { lo, hi, steps })
            }
            _ => Err(Error::InvalidSweep(format!(
                "expected lo:hi:steps or a single value, got {s:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisName {
    Gamma,
    N,
}

impl FromStr for AxisName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gamma" => Ok(AxisName::Gamma),
            "n" => Ok(AxisName::N),
            _ => Err(Error::InvalidSweep(format!("unknown axis {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Angle,
    AreaFixedLeg,
    AreaFixedPerimeter,
    Ncrit,
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "angle" => Ok(Quantity::Angle),
            "area_fixed_leg" => Ok(Quantity::AreaFixedLeg),
            "area_fixed_perimeter" => Ok(Quantity::AreaFixedPerimeter),
            "ncrit" => Ok(Quantity::Ncrit),
            _ => Err(Error::InvalidSweep(format!("unknown quantity {s:?}"))),
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::Angle => "angle",
            Quantity::AreaFixedLeg => "area_fixed_leg",
            Quantity::AreaFixedPerimeter => "area_fixed_perimeter",
            Quantity::Ncrit => "ncrit",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AngleUnit {
    #[default]
    Degrees,
    Radians,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub quantity: Quantity,
    pub gamma: AxisValues,
    pub n: Option<AxisValues>,
    /// Axis that varies slowest in the output.
    pub major: AxisName,
    pub a: f64,
    pub perimeter: f64,
    pub unit: AngleUnit,
    pub tolerances: Tolerances,
}

impl SweepSpec {
    pub fn new(quantity: Quantity, gamma: AxisValues, n: Option<AxisValues>) -> Self {
        SweepSpec {
            quantity,
            gamma,
            n,
            major: AxisName::Gamma,
            a: 1.0,
            perimeter: 1.0,
            unit: AngleUnit::Degrees,
            tolerances: Tolerances::default(),
        }
    }

    pub fn major(self, major: AxisName) -> Self {
        SweepSpec { major, ..self }
    }

    fn validate(&self) -> Result<()> {
        check_length("leg a", self.a)?;
        check_length("perimeter", self.perimeter)?;
        match (self.quantity, self.n) {
            (Quantity::Ncrit, Some(_)) => {
                Err(Error::InvalidSweep("ncrit sweeps take no n axis".into()))
            }
            (Quantity::Ncrit, None) => Ok(()),
            (_, None) => Err(Error::InvalidSweep(format!(
                "{} sweeps need an n axis",
                self.quantity
            ))),
            (_, Some(n)) => {
                if n.values().contains(&0.0) {
                    return Err(Error::ZeroDegree);
                }
                Ok(())
            }
        }
    }

    pub fn columns(&self) -> Vec<&'static str> {
        match self.quantity {
            Quantity::Angle => match self.unit {
                AngleUnit::Degrees => vec!["gamma", "n", "theta_deg"],
                AngleUnit::Radians => vec!["gamma", "n", "theta_rad"],
            },
            Quantity::AreaFixedLeg => vec!["gamma", "n", "a", "area"],
            Quantity::AreaFixedPerimeter => vec!["gamma", "n", "perimeter", "area"],
            Quantity::Ncrit => vec!["gamma", "n_crit", "residual"],
        }
    }

    /// `(γ, n)` pairs in output order.
    fn points(&self) -> Vec<(f64, f64)> {
        let gs = self.gamma.values();
        let ns = self.n.map_or_else(|| vec![f64::NAN], |n| n.values());
        match self.major {
            AxisName::Gamma => gs
                .iter()
                .flat_map(|&g| ns.iter().map(move |&n| (g, n)))
                .collect(),
            AxisName::N => ns
                .iter()
                .flat_map(|&n| gs.iter().map(move |&g| (g, n)))
                .collect(),
        }
    }

    fn row(&self, g: f64, n: f64) -> Result<Vec<Cell>> {
        let gamma = SideRatio::excluded_regime(g)?;
        if self.quantity == Quantity::Ncrit {
            return Ok(match solve_ncrit(gamma, self.tolerances.root) {
                Ok(c) => vec![
                    Cell::Value(g),
                    Cell::Value(c.n_crit),
                    Cell::Value(c.residual),
                ],
                Err(_) => vec![Cell::Value(g), Cell::Excluded, Cell::Excluded],
            });
        }
        let degree = Degree::new(n)?;
        let value = match self.quantity {
            Quantity::Angle => vertex_angle_with(gamma, degree, self.tolerances.domain)
                .theta()
                .map(|t| match self.unit {
                    AngleUnit::Degrees => t.to_degrees(),
                    AngleUnit::Radians => t,
                }),
            Quantity::AreaFixedLeg => area_cell(area_fixed_leg(self.a, gamma, degree))?,
            Quantity::AreaFixedPerimeter => {
                area_cell(area_fixed_perimeter(self.perimeter, gamma, degree))?
            }
            Quantity::Ncrit => unreachable!("handled above"),
        };
        let mut row = vec![Cell::Value(g), Cell::Value(n)];
        match self.quantity {
            Quantity::AreaFixedLeg => row.push(Cell::Value(self.a)),
            Quantity::AreaFixedPerimeter => row.push(Cell::Value(self.perimeter)),
            _ => {}
        }
        row.push(value.map_or(Cell::Excluded, Cell::Value));
        Ok(row)
    }

    /// Evaluates every cell. Rows are computed in parallel and returned in
    /// output order.
    pub fn run(&self) -> Result<SweepTable> {
        self.validate()?;
        let rows = self
            .points()
            .par_iter()
            .map(|&(g, n)| self.row(g, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(SweepTable {
            quantity: self.quantity,
            columns: self.columns(),
            rows,
        })
    }
}

/// Exclusions become cells; anything else is a real error.
fn area_cell(r: Result<crate::area::AreaValue>) -> Result<Option<f64>> {
    match r {
        Ok(v) => Ok(Some(v.area)),
        Err(Error::Excluded(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Value(f64),
    Excluded,
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Value(x) => f.write_str(&fmt_g17(*x)),
            Cell::Excluded => f.write_str(EXCLUDED),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub quantity: Quantity,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl SweepTable {
    /// Header plus one line per row, LF-terminated.
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// `{"quantity", "columns", "rows"}` with numbers in the CSV rendering
    /// and excluded cells as the string `"excluded"`.
    pub fn to_json(&self) -> String {
        let quote = |s: &str| serde_json::to_string(s).expect("string serializes");
        let columns: Vec<String> = self.columns.iter().map(|c| quote(c)).collect();
        let mut out = format!(
            "{{\"quantity\":{},\"columns\":[{}],\"rows\":[",
            quote(&self.quantity.to_string()),
            columns.join(",")
        );
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let cells: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Cell::Value(x) if x.is_finite() => fmt_g17(*x),
                    _ => quote(EXCLUDED),
                })
                .collect();
            out.push('[');
            out.push_str(&cells.join(","));
            out.push(']');
        }
        out.push_str("]}\n");
        out
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }
}
