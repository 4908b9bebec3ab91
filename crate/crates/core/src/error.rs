use thiserror::Error;

use crate::angle::Exclusion;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} must be finite, got {value}")]
    NonFinite { what: &'static str, value: f64 },

    #[error("side ratio must be positive, got {0}")]
    NonPositiveRatio(f64),

    #[error("side ratio {0} is below 1; only the excluded-regime constructor accepts it")]
    RatioBelowOne(f64),

    #[error("degree n = 0 does not define a triangle")]
    ZeroDegree,

    #[error("degree {0} lies in 0 < n < 1, where the vertex angle is complex")]
    FractionalDegree(f64),

    #[error("side ratio {0} >= 2 admits no real triangle for negative degrees")]
    RatioAtLeastTwo(f64),

    #[error("isosceles triangles (gamma = 1) have no critical degree; every n < 0 is valid")]
    NoCriticalDegree,

    #[error("{what} requires {requirement}, got {value}")]
    OutOfDomain {
        what: &'static str,
        requirement: &'static str,
        value: f64,
    },

    #[error(
        "no sign change of the critical-degree residual for gamma = {gamma} above n = {floor}"
    )]
    InconclusiveBracket { gamma: f64, floor: f64 },

    #[error("critical-degree residual for gamma = {gamma} changes sign {sign_changes} times on the scan grid")]
    NonUniqueRoot { gamma: f64, sign_changes: usize },

    #[error(
        "bisection for gamma = {gamma} stalled at residual {achieved:e}, above tolerance {tol:e}"
    )]
    ToleranceUnreachable { gamma: f64, achieved: f64, tol: f64 },

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("{what} must be a positive length, got {value}")]
    InvalidLength { what: &'static str, value: f64 },

    #[error("sides ({a}, {b}, {c}) violate the triangle inequality")]
    TriangleInequality { a: f64, b: f64, c: f64 },

    #[error("excluded: {0}")]
    Excluded(Exclusion),

    #[error("function evaluated to a non-finite value at x = {0}")]
    NonFiniteEvaluation(f64),

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("invalid expectations file: {0}")]
    InvalidExpectations(String),
}

pub(crate) fn check_length(what: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::InvalidLength { what, value })
    }
}

pub(crate) fn check_tolerance(tol: f64) -> Result<f64> {
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err(Error::InvalidTolerance(tol))
    }
}
