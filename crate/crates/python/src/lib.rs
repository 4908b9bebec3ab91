//! Python bindings. Lengths and angles are plain floats (radians); failures
//! raise `ValueError`, with `ExcludedError` for `(γ, n)` pairs that have no
//! real triangle.

use ndegree::sweep::{AngleUnit, AxisName, OutputFormat, Quantity};
use ndegree::verify::{heron_area as heron, Expectations};
use ndegree::{AreaFamily, Degree, Error, SideRatio};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(ndegree, ExcludedError, PyValueError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Excluded(_) | Error::FractionalDegree(_) | Error::RatioAtLeastTwo(_) => {
            ExcludedError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn ratio(gamma: f64) -> PyResult<SideRatio> {
    SideRatio::new(gamma).map_err(to_py)
}

fn degree(n: f64) -> PyResult<Degree> {
    Degree::new(n).map_err(to_py)
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(to_py)
}

/// Vertex angle, or the reason there is none.
#[pyclass(frozen, get_all, module = "ndegree")]
pub struct AngleOutcome {
    /// Radians, `None` when excluded.
    theta: Option<f64>,
    cos_arg: Option<f64>,
    exclusion: Option<String>,
}

#[pymethods]
impl AngleOutcome {
    #[getter]
    fn is_real(&self) -> bool {
        self.theta.is_some()
    }

    #[getter]
    fn degrees(&self) -> Option<f64> {
        self.theta.map(f64::to_degrees)
    }

    fn __repr__(&self) -> String {
        match (&self.theta, &self.exclusion) {
            (Some(t), _) => format!("AngleOutcome(theta={t:?})"),
            (None, Some(e)) => format!("AngleOutcome(excluded={e:?})"),
            (None, None) => "AngleOutcome()".into(),
        }
    }
}

impl From<ndegree::AngleOutcome> for AngleOutcome {
    fn from(o: ndegree::AngleOutcome) -> Self {
        AngleOutcome {
            theta: o.theta(),
            cos_arg: o.cos_arg(),
            exclusion: o.exclusion().map(|e| e.to_string()),
        }
    }
}

#[pyclass(frozen, get_all, module = "ndegree")]
pub struct CriticalDegree {
    gamma: f64,
    n_crit: f64,
    residual: f64,
    bracket: (f64, f64),
}

#[pymethods]
impl CriticalDegree {
    fn __repr__(&self) -> String {
        format!(
            "CriticalDegree(gamma={:?}, n_crit={:?}, residual={:?})",
            self.gamma, self.n_crit, self.residual
        )
    }
}

#[pyclass(frozen, get_all, module = "ndegree")]
pub struct AreaValue {
    area: f64,
    /// `"fixed_leg"` or `"fixed_perimeter"`.
    family: &'static str,
    /// The fixed leg or perimeter.
    scale: f64,
}

#[pymethods]
impl AreaValue {
    fn __repr__(&self) -> String {
        format!(
            "AreaValue(area={:?}, family={:?}, scale={:?})",
            self.area, self.family, self.scale
        )
    }

    fn __float__(&self) -> f64 {
        self.area
    }
}

impl From<ndegree::AreaValue> for AreaValue {
    fn from(v: ndegree::AreaValue) -> Self {
        let (family, scale) = match v.family {
            AreaFamily::FixedLeg { a } => ("fixed_leg", a),
            AreaFamily::FixedPerimeter { perimeter } => ("fixed_perimeter", perimeter),
        };
        AreaValue {
            area: v.area,
            family,
            scale,
        }
    }
}

#[pyfunction]
#[pyo3(signature = (gamma, n, tol_domain = None))]
fn vertex_angle(gamma: f64, n: f64, tol_domain: Option<f64>) -> PyResult<AngleOutcome> {
    let tol = tol_domain.unwrap_or(ndegree::tolerance::DEFAULT_DOMAIN_TOL);
    Ok(ndegree::vertex_angle_with(ratio(gamma)?, degree(n)?, tol).into())
}

#[pyfunction]
fn cos_vertex_arg(gamma: f64, n: f64) -> PyResult<f64> {
    Ok(ndegree::cos_vertex_arg(ratio(gamma)?, degree(n)?))
}

/// `"acute"`, `"right"`, `"obtuse"` or `"degenerate"`.
#[pyfunction]
fn classify_triangle(gamma: f64, n: f64) -> PyResult<String> {
    ndegree::classify_triangle(ratio(gamma)?, degree(n)?)
        .map(|c| c.to_string())
        .map_err(|e| to_py(Error::Excluded(e)))
}

#[pyfunction]
fn limit_angle_pos_inf(gamma: f64) -> PyResult<f64> {
    Ok(ndegree::limit_angle_pos_inf(ratio(gamma)?))
}

#[pyfunction]
fn limit_angle_neg_inf(gamma: f64) -> PyResult<f64> {
    ndegree::limit_angle_neg_inf(ratio(gamma)?).map_err(to_py)
}

#[pyfunction]
fn extremal_isosceles_angle(n: f64) -> PyResult<f64> {
    ndegree::extremal_isosceles_angle(degree(n)?).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (gamma, tol_root = ndegree::tolerance::DEFAULT_ROOT_TOL))]
fn solve_ncrit(gamma: f64, tol_root: f64) -> PyResult<CriticalDegree> {
    let c = ndegree::solve_ncrit(ratio(gamma)?, tol_root).map_err(to_py)?;
    Ok(CriticalDegree {
        gamma: c.gamma.value(),
        n_crit: c.n_crit,
        residual: c.residual,
        bracket: c.bracket,
    })
}

#[pyfunction]
fn ncrit_residual(gamma: f64, n: f64) -> PyResult<f64> {
    ndegree::ncrit_residual(ratio(gamma)?, degree(n)?).map_err(to_py)
}

#[pyfunction]
fn is_real_domain(gamma: f64, n: f64) -> PyResult<bool> {
    Ok(ndegree::is_real_domain(ratio(gamma)?, degree(n)?))
}

/// `(a, b, c)`.
#[pyfunction]
fn side_lengths(a: f64, gamma: f64, n: f64) -> PyResult<(f64, f64, f64)> {
    let s = ndegree::side_lengths(a, ratio(gamma)?, degree(n)?).map_err(to_py)?;
    Ok((s.a, s.b, s.c))
}

#[pyfunction]
fn area_fixed_leg(a: f64, gamma: f64, n: f64) -> PyResult<AreaValue> {
    ndegree::area_fixed_leg(a, ratio(gamma)?, degree(n)?)
        .map(Into::into)
        .map_err(to_py)
}

#[pyfunction]
fn area_fixed_perimeter(perimeter: f64, gamma: f64, n: f64) -> PyResult<AreaValue> {
    ndegree::area_fixed_perimeter(perimeter, ratio(gamma)?, degree(n)?)
        .map(Into::into)
        .map_err(to_py)
}

#[pyfunction]
fn heron_area(a: f64, b: f64, c: f64) -> PyResult<f64> {
    heron(&ndegree::TriangleSides { a, b, c }).map_err(to_py)
}

#[pyfunction]
fn fmt_g17(x: f64) -> String {
    ndegree::fmt_g17(x)
}

fn output_format(format: &str) -> PyResult<OutputFormat> {
    match format {
        "csv" => Ok(OutputFormat::Csv),
        "json" => Ok(OutputFormat::Json),
        _ => Err(PyValueError::new_err(format!("unknown format {format:?}"))),
    }
}

/// Tabulates `quantity` and returns the CSV or JSON text.
#[pyfunction]
#[pyo3(signature = (quantity, gamma, n = None, major = "gamma", a = 1.0, perimeter = 1.0, radians = false, format = "csv"))]
#[allow(clippy::too_many_arguments)]
fn sweep(
    quantity: &str,
    gamma: &str,
    n: Option<&str>,
    major: &str,
    a: f64,
    perimeter: f64,
    radians: bool,
    format: &str,
) -> PyResult<String> {
    let q: Quantity = parse(quantity)?;
    let n = n.map(parse).transpose()?;
    let mut spec = ndegree::SweepSpec::new(q, parse(gamma)?, n).major(parse::<AxisName>(major)?);
    spec.a = a;
    spec.perimeter = perimeter;
    if radians {
        spec.unit = AngleUnit::Radians;
    }
    let format = output_format(format)?;
    Ok(spec.run().map_err(to_py)?.render(format))
}

#[pyfunction]
#[pyo3(signature = (number, format = "csv"))]
fn figure_sweep(number: u8, format: &str) -> PyResult<String> {
    let spec = ndegree::figures::figure_sweep(number)
        .ok_or_else(|| PyValueError::new_err(format!("no preset for figure {number}")))?;
    Ok(spec.run().map_err(to_py)?.render(output_format(format)?))
}

/// The claims report as JSON (or aligned text).
#[pyfunction]
#[pyo3(signature = (format = "json"))]
fn run_claims_report(py: Python<'_>, format: &str) -> PyResult<String> {
    let report = py.detach(ndegree::run_claims_report);
    match format {
        "json" => Ok(report.to_json()),
        "text" => Ok(report.to_text()),
        _ => Err(PyValueError::new_err(format!("unknown format {format:?}"))),
    }
}

/// Whether every claim matches its shipped expected status.
#[pyfunction]
fn verify(py: Python<'_>) -> bool {
    let report = py.detach(ndegree::run_claims_report);
    report.mismatches(&Expectations::bundled()).is_empty()
}

#[pyfunction]
fn claim_ids() -> Vec<&'static str> {
    ndegree::verify::claim_ids()
}

#[pymodule]
#[pyo3(name = "ndegree")]
fn ndegree_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("ExcludedError", m.py().get_type::<ExcludedError>())?;
    m.add_class::<AngleOutcome>()?;
    m.add_class::<CriticalDegree>()?;
    m.add_class::<AreaValue>()?;
    m.add_function(wrap_pyfunction!(vertex_angle, m)?)?;
    m.add_function(wrap_pyfunction!(cos_vertex_arg, m)?)?;
    m.add_function(wrap_pyfunction!(classify_triangle, m)?)?;
    m.add_function(wrap_pyfunction!(limit_angle_pos_inf, m)?)?;
    m.add_function(wrap_pyfunction!(limit_angle_neg_inf, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_isosceles_angle, m)?)?;
    m.add_function(wrap_pyfunction!(solve_ncrit, m)?)?;
    m.add_function(wrap_pyfunction!(ncrit_residual, m)?)?;
    m.add_function(wrap_pyfunction!(is_real_domain, m)?)?;
    m.add_function(wrap_pyfunction!(side_lengths, m)?)?;
    m.add_function(wrap_pyfunction!(area_fixed_leg, m)?)?;
    m.add_function(wrap_pyfunction!(area_fixed_perimeter, m)?)?;
    m.add_function(wrap_pyfunction!(heron_area, m)?)?;
    m.add_function(wrap_pyfunction!(fmt_g17, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(figure_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(run_claims_report, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(claim_ids, m)?)?;
    Ok(())
}
