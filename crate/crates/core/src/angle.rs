//! The vertex angle between the legs `a` and `b = γa` forced by requiring
//! `a^n + b^n = c^n` to agree with the Law of Cosines:
//!
//! ```text
//! cos θ = [γ² + 1 − (γ^n + 1)^(2/n)] / (2γ)
//! ```
//!
//! The same expression covers positive and negative degrees. Whether it
//! yields a real angle depends on the regime; the complex regimes are
//! reported as [`Exclusion`] values, never computed.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::power::{pow_ratio, pow_sum_root};
use crate::tolerance::DEFAULT_DOMAIN_TOL;

/// Angular tolerance (radians) used by [`classify_triangle`].
pub const CLASSIFY_TOL: f64 = 1e-9;

/// Side ratio `γ = b/a`.
///
/// [`SideRatio::new`] enforces `γ ≥ 1`. Ratios below one describe the same
/// triangles rotated in the plane and are only accepted through
/// [`SideRatio::excluded_regime`], which exists for figure sweeps that run
/// into `γ < 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct SideRatio(f64);

impl SideRatio {
    pub fn new(gamma: f64) -> Result<Self> {
        let r = Self::excluded_regime(gamma)?;
        if gamma < 1.0 {
            return Err(Error::RatioBelowOne(gamma));
        }
        Ok(r)
    }

    /// Unchecked-below-one constructor for the excluded regime `0 < γ < 1`.
    pub fn excluded_regime(gamma: f64) -> Result<Self> {
        if !gamma.is_finite() {
            return Err(Error::NonFinite {
                what: "side ratio",
                value: gamma,
            });
        }
        if gamma <= 0.0 {
            return Err(Error::NonPositiveRatio(gamma));
        }
        Ok(SideRatio(gamma))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_excluded_regime(self) -> bool {
        self.0 < 1.0
    }

    /// `max(γ, 1/γ)`. The vertex angle is invariant under `γ -> 1/γ`.
    pub fn canonical(self) -> f64 {
        if self.0 < 1.0 {
            1.0 / self.0
        } else {
            self.0
        }
    }
}

/// Degree `n` of `a^n + b^n = c^n`; any finite nonzero real.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Degree(f64);

impl Degree {
    pub fn new(n: f64) -> Result<Self> {
        if !n.is_finite() {
            return Err(Error::NonFinite {
                what: "degree",
                value: n,
            });
        }
        if n == 0.0 {
            return Err(Error::ZeroDegree);
        }
        Ok(Degree(n))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_fractional(self) -> bool {
        self.0 > 0.0 && self.0 < 1.0
    }
}

/// Why a `(γ, n)` pair has no real vertex angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Exclusion {
    /// `0 < n < 1`: complex for every side ratio.
    FractionalPositiveDegree,
    /// `n < 0` above the critical degree of a `1 < γ < 2` triangle.
    ExceedsCriticalDegree,
    /// `n < 0` with `γ ≥ 2`.
    RatioAtLeastTwo,
}

impl fmt::Display for Exclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Exclusion::FractionalPositiveDegree => "fractional positive degree (0 < n < 1)",
            Exclusion::ExceedsCriticalDegree => "exceeds critical degree",
            Exclusion::RatioAtLeastTwo => "ratio ≥ 2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum AngleOutcome {
    Real { theta: f64, cos_arg: f64 },
    Excluded(Exclusion),
}

impl AngleOutcome {
    pub fn theta(&self) -> Option<f64> {
        match *self {
            AngleOutcome::Real { theta, .. } => Some(theta),
            AngleOutcome::Excluded(_) => None,
        }
    }

    pub fn cos_arg(&self) -> Option<f64> {
        match *self {
            AngleOutcome::Real { cos_arg, .. } => Some(cos_arg),
            AngleOutcome::Excluded(_) => None,
        }
    }

    pub fn exclusion(&self) -> Option<Exclusion> {
        match *self {
            AngleOutcome::Real { .. } => None,
            AngleOutcome::Excluded(e) => Some(e),
        }
    }

    pub fn is_real(&self) -> bool {
        matches!(self, AngleOutcome::Real { .. })
    }

    /// The angle, or the exclusion as an error.
    pub fn real(self) -> Result<f64> {
        match self {
            AngleOutcome::Real { theta, .. } => Ok(theta),
            AngleOutcome::Excluded(e) => Err(Error::Excluded(e)),
        }
    }
}

/// `cos θ` before any domain handling; may lie outside `[-1, 1]`.
pub fn cos_vertex_arg(gamma: SideRatio, n: Degree) -> f64 {
    vertex_bracket(gamma, n) / (2.0 * gamma.value())
}

/// `γ² + 1 − (γ^n + 1)^(2/n)`, i.e. `2γ cos θ`.
pub(crate) fn vertex_bracket(gamma: SideRatio, n: Degree) -> f64 {
    let g = gamma.value();
    g * g + 1.0 - pow_sum_root(g, n.value(), 2.0)
}

pub fn vertex_angle(gamma: SideRatio, n: Degree) -> AngleOutcome {
    vertex_angle_with(gamma, n, DEFAULT_DOMAIN_TOL)
}

/// Vertex angle with an explicit clamping band around `|cos θ| = 1`.
///
/// For `n < 0, γ ≥ 2` the argument exceeds one analytically, but by less
/// than an ulp once `γ^n` underflows, so that case is decided on the ratio.
pub fn vertex_angle_with(gamma: SideRatio, n: Degree, tol_domain: f64) -> AngleOutcome {
    let nv = n.value();
    if n.is_fractional() {
        return AngleOutcome::Excluded(Exclusion::FractionalPositiveDegree);
    }
    let arg = cos_vertex_arg(gamma, n);
    if nv < 0.0 {
        if gamma.canonical() >= 2.0 {
            return AngleOutcome::Excluded(Exclusion::RatioAtLeastTwo);
        }
        if arg.abs() > 1.0 + tol_domain {
            return AngleOutcome::Excluded(Exclusion::ExceedsCriticalDegree);
        }
    }
    let cos_arg = arg.clamp(-1.0, 1.0);
    let theta = if cos_arg.abs() < 0.5 {
        cos_arg.acos()
    } else {
        half_angle_theta(gamma.value(), nv)
    };
    AngleOutcome::Real { theta, cos_arg }
}

/// `2 atan2(√(c² − (γ−1)²), √((γ+1)² − c²))` with `c = (γ^n + 1)^(1/n)`.
///
/// Used away from the middle, where `acos` loses half its digits next to
/// `±1`; the factored differences stay exact there, so `θ(γ, 1) = π`.
fn half_angle_theta(g: f64, n: f64) -> f64 {
    let c = pow_sum_root(g, n, 1.0);
    let d = (g - 1.0).abs();
    let s = g + 1.0;
    let opposite = ((c - d) * (c + d)).max(0.0);
    let adjacent = ((s - c) * (s + c)).max(0.0);
    2.0 * opposite.sqrt().atan2(adjacent.sqrt())
}

/// `lim θ` as `n -> +∞`, piecewise in `γ`.
pub fn limit_angle_pos_inf(gamma: SideRatio) -> f64 {
    let g = gamma.value();
    if g < 1.0 {
        (g / 2.0).acos()
    } else if g == 1.0 {
        FRAC_PI_3
    } else {
        (1.0 / (2.0 * g)).acos()
    }
}

/// `lim θ` as `n -> −∞`; defined for `1 ≤ γ < 2` (or its reciprocal).
pub fn limit_angle_neg_inf(gamma: SideRatio) -> Result<f64> {
    let g = gamma.canonical();
    if g >= 2.0 {
        return Err(Error::RatioAtLeastTwo(gamma.value()));
    }
    if g == 1.0 {
        Ok(FRAC_PI_3)
    } else {
        Ok((g / 2.0).acos())
    }
}

/// Isosceles vertex angle `arccos(1 − 2^((2−n)/n))`.
///
/// Over `γ` this is the largest angle for `1 ≤ n ≤ 2` and for `n < 0`, and
/// the smallest for `n ≥ 2`.
pub fn extremal_isosceles_angle(n: Degree) -> Result<f64> {
    if n.is_fractional() {
        return Err(Error::FractionalDegree(n.value()));
    }
    let nv = n.value();
    Ok((1.0 - 2f64.powf((2.0 - nv) / nv)).clamp(-1.0, 1.0).acos())
}

/// `1 − γ² + (γ^n − 1)(γ^n + 1)^((2−n)/n)`; zero where `dθ/dγ = 0`.
///
/// Its sign is the sign of `dθ/dγ`.
pub fn angle_stationarity_residual(gamma: SideRatio, n: Degree) -> f64 {
    let g = gamma.value();
    let nv = n.value();
    // (γ^n − 1)(γ^n + 1)^((2−n)/n) = tanh(n ln γ / 2) · (γ^n + 1)^(2/n)
    1.0 - g * g + pow_ratio(g, nv) * pow_sum_root(g, nv, 2.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TriangleClass {
    Degenerate,
    Right,
    Obtuse,
    Acute,
}

impl fmt::Display for TriangleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriangleClass::Degenerate => "degenerate",
            TriangleClass::Right => "right",
            TriangleClass::Obtuse => "obtuse",
            TriangleClass::Acute => "acute",
        })
    }
}

pub fn classify_triangle(
    gamma: SideRatio,
    n: Degree,
) -> std::result::Result<TriangleClass, Exclusion> {
    let theta = match vertex_angle(gamma, n) {
        AngleOutcome::Real { theta, .. } => theta,
        AngleOutcome::Excluded(e) => return Err(e),
    };
    Ok(if theta <= CLASSIFY_TOL || (PI - theta) <= CLASSIFY_TOL {
        TriangleClass::Degenerate
    } else if (theta - FRAC_PI_2).abs() <= CLASSIFY_TOL {
        TriangleClass::Right
    } else if theta > FRAC_PI_2 {
        TriangleClass::Obtuse
    } else {
        TriangleClass::Acute
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: f64) -> SideRatio {
        SideRatio::new(v).unwrap()
    }
    fn d(v: f64) -> Degree {
        Degree::new(v).unwrap()
    }
    fn deg(theta: f64) -> f64 {
        theta.to_degrees()
    }

    #[test]
    fn constructors_reject_bad_input() {
        assert_eq!(SideRatio::new(0.5), Err(Error::RatioBelowOne(0.5)));
        assert!(SideRatio::excluded_regime(0.5)
            .unwrap()
            .is_excluded_regime());
        assert_eq!(SideRatio::new(-1.0), Err(Error::NonPositiveRatio(-1.0)));
        assert!(matches!(
            SideRatio::new(f64::NAN),
            Err(Error::NonFinite { .. })
        ));
        assert!(matches!(
            SideRatio::new(f64::INFINITY),
            Err(Error::NonFinite { .. })
        ));
        assert_eq!(Degree::new(0.0), Err(Error::ZeroDegree));
        assert!(matches!(
            Degree::new(f64::NAN),
            Err(Error::NonFinite { .. })
        ));
    }

    #[test]
    fn cos_arg_examples() {
        assert_eq!(cos_vertex_arg(g(1.0), d(2.0)), 0.0);
        assert_eq!(cos_vertex_arg(g(1.0), d(1.0)), -1.0);
        // values from a 60-digit evaluation
        assert!((cos_vertex_arg(g(1.5), d(-2.0)) - 0.852_564_102_564_102_6).abs() < 1e-15);
        let out = cos_vertex_arg(g(1.5), d(-0.5));
        assert!((out - 1.052_717_900_324_019_2).abs() < 1e-14);
    }

    #[test]
    fn angle_examples() {
        assert!((deg(vertex_angle(g(1.7), d(1.0)).real().unwrap()) - 180.0).abs() < 1e-9);
        assert!((deg(vertex_angle(g(1.3), d(2.0)).real().unwrap()) - 90.0).abs() < 1e-9);
        let t = vertex_angle(g(1.5), d(-2.0)).real().unwrap();
        assert!((deg(t) - 31.508_339_739_760_01).abs() < 1e-10);
        assert_eq!(
            vertex_angle(g(1.5), d(-0.5)),
            AngleOutcome::Excluded(Exclusion::ExceedsCriticalDegree)
        );
        assert_eq!(
            vertex_angle(g(1.2), d(0.5)),
            AngleOutcome::Excluded(Exclusion::FractionalPositiveDegree)
        );
        assert_eq!(
            vertex_angle(g(2.0), d(-1e6)),
            AngleOutcome::Excluded(Exclusion::RatioAtLeastTwo)
        );
        assert_eq!(
            vertex_angle(g(3.0), d(-1.0)),
            AngleOutcome::Excluded(Exclusion::RatioAtLeastTwo)
        );
    }

    #[test]
    fn real_outcome_cosine_matches_argument() {
        for &(gv, nv) in &[(1.0, 1.0), (1.4, 1.3), (2.5, 7.0), (1.2, -3.0), (1.0, -0.1)] {
            match vertex_angle(g(gv), d(nv)) {
                AngleOutcome::Real { theta, cos_arg } => {
                    assert!((0.0..=PI).contains(&theta));
                    assert!((theta.cos() - cos_arg).abs() <= 1e-12);
                }
                other => panic!("{gv},{nv}: {other:?}"),
            }
        }
    }

    #[test]
    fn clamp_band_is_respected() {
        let gamma = g(1.5);
        let inside = vertex_angle_with(gamma, d(-0.787_884_911_025_87), 1e-12);
        assert!(inside.is_real());
        let strict = vertex_angle_with(gamma, d(-0.78), 1e-12);
        assert_eq!(strict.exclusion(), Some(Exclusion::ExceedsCriticalDegree));
        // a huge band admits anything
        assert!(vertex_angle_with(gamma, d(-0.5), 0.1).is_real());
    }

    #[test]
    fn excluded_regime_uses_reciprocal_symmetry() {
        let lo = SideRatio::excluded_regime(1.0 / 1.5).unwrap();
        let a = vertex_angle(lo, d(-2.0)).real().unwrap();
        let b = vertex_angle(g(1.5), d(-2.0)).real().unwrap();
        assert!((a - b).abs() < 1e-12);
        let tiny = SideRatio::excluded_regime(0.4).unwrap();
        assert_eq!(
            vertex_angle(tiny, d(-3.0)).exclusion(),
            Some(Exclusion::RatioAtLeastTwo)
        );
    }

    #[test]
    fn positive_limit_cases() {
        assert!((deg(limit_angle_pos_inf(g(1.0))) - 60.0).abs() < 1e-12);
        assert!((deg(limit_angle_pos_inf(g(2.0))) - 75.522_487_814_070_08).abs() < 1e-10);
        assert!((deg(limit_angle_pos_inf(g(1e12))) - 90.0).abs() < 1e-9);
        let lo = SideRatio::excluded_regime(0.5).unwrap();
        assert!((limit_angle_pos_inf(lo) - 0.25f64.acos()).abs() < 1e-15);
    }

    #[test]
    fn negative_limit_cases() {
        assert!((deg(limit_angle_neg_inf(g(1.0)).unwrap()) - 60.0).abs() < 1e-12);
        assert!((deg(limit_angle_neg_inf(g(2f64.sqrt())).unwrap()) - 45.0).abs() < 1e-12);
        let near_two = deg(limit_angle_neg_inf(g(1.999)).unwrap());
        assert!((near_two - 1.811_927_138_073_909).abs() < 1e-9);
        assert_eq!(
            limit_angle_neg_inf(g(2.0)),
            Err(Error::RatioAtLeastTwo(2.0))
        );
    }

    #[test]
    fn extremal_angle_examples() {
        assert!((deg(extremal_isosceles_angle(d(1.0)).unwrap()) - 180.0).abs() < 1e-12);
        assert!((deg(extremal_isosceles_angle(d(2.0)).unwrap()) - 90.0).abs() < 1e-12);
        let four = deg(extremal_isosceles_angle(d(4.0)).unwrap());
        assert!((four - 72.968_751_541_776_57).abs() < 1e-10);
        assert_eq!(
            extremal_isosceles_angle(d(0.3)),
            Err(Error::FractionalDegree(0.3))
        );
    }

    fn dtheta_dgamma(gv: f64, nv: f64) -> f64 {
        let h = 1e-6 * gv.max(1.0);
        let f = |x: f64| {
            vertex_angle(SideRatio::excluded_regime(x).unwrap(), d(nv))
                .real()
                .unwrap()
        };
        (f(gv + h) - f(gv - h)) / (2.0 * h)
    }

    #[test]
    fn stationarity_residual_vanishes_at_isosceles() {
        assert_eq!(angle_stationarity_residual(g(1.0), d(3.0)), 0.0);
        assert_eq!(angle_stationarity_residual(g(1.0), d(-4.0)), 0.0);
        assert!(dtheta_dgamma(1.0, 3.0).abs() < 1e-6);
    }

    #[test]
    fn stationarity_residual_sign_tracks_derivative() {
        for &(gv, nv) in &[(1.5, 3.0), (1.5, 1.5), (2.5, 7.0), (1.3, -3.0), (1.2, -1.0)] {
            let r = angle_stationarity_residual(g(gv), d(nv));
            let fd = dtheta_dgamma(gv, nv);
            assert!(r != 0.0);
            assert_eq!(r.signum(), fd.signum(), "({gv},{nv}) r={r} fd={fd}");
            // dθ/dγ = r / (2γ² sin θ)
            let theta = vertex_angle(g(gv), d(nv)).real().unwrap();
            let analytic = r / (2.0 * gv * gv * theta.sin());
            assert!((analytic - fd).abs() < 1e-6 * (1.0 + fd.abs()));
        }
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_triangle(g(1.2), d(1.5)), Ok(TriangleClass::Obtuse));
        assert_eq!(classify_triangle(g(1.2), d(2.0)), Ok(TriangleClass::Right));
        assert_eq!(classify_triangle(g(1.2), d(5.0)), Ok(TriangleClass::Acute));
        assert_eq!(
            classify_triangle(g(1.2), d(1.0)),
            Ok(TriangleClass::Degenerate)
        );
        assert_eq!(
            classify_triangle(g(2.2), d(-1.0)),
            Err(Exclusion::RatioAtLeastTwo)
        );
    }
}
