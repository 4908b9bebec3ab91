//! Numerical tolerances shared by the angle, critical-degree and area code.

use crate::error::{check_tolerance, Result};

/// Band around |cos θ| = 1 inside which the cosine argument is clamped
/// rather than treated as leaving the real domain.
pub const DEFAULT_DOMAIN_TOL: f64 = 1e-12;

/// Residual tolerance for the critical-degree bisection.
pub const DEFAULT_ROOT_TOL: f64 = 1e-12;

/// Radicands of the area formulas above `-RADICAND_CLAMP * scale` are
/// clamped to zero (degenerate triangles round to tiny negatives).
pub const RADICAND_CLAMP: f64 = 1e-12;

/// Surrogate degree used for the n -> +/- infinity limits.
pub const INFINITE_DEGREE_SURROGATE: f64 = 1e6;

/// Environment variable overriding [`DEFAULT_DOMAIN_TOL`].
pub const ENV_DOMAIN_TOL: &str = "NDEGREE_TOL_DOMAIN";
/// Environment variable overriding [`DEFAULT_ROOT_TOL`].
pub const ENV_ROOT_TOL: &str = "NDEGREE_TOL_ROOT";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub domain: f64,
    pub root: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            domain: DEFAULT_DOMAIN_TOL,
            root: DEFAULT_ROOT_TOL,
        }
    }
}

impl Tolerances {
    pub fn new(domain: f64, root: f64) -> Result<Self> {
        Ok(Tolerances {
            domain: check_tolerance(domain)?,
            root: check_tolerance(root)?,
        })
    }
}
