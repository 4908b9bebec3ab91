//! Areas of the triangles with legs `a`, `b = γa` and third side
//! `c = a(γ^n + 1)^(1/n)`, under a fixed leg `a` or a fixed perimeter `P`,
//! together with their closed-form extremal and limiting members.

use serde::Serialize;

use crate::angle::{vertex_angle, vertex_bracket, Degree, SideRatio};
use crate::error::{check_length, Error, Result};
use crate::power::{pow_fraction, pow_sum_root};
use crate::tolerance::RADICAND_CLAMP;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TriangleSides {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl TriangleSides {
    pub fn perimeter(&self) -> f64 {
        self.a + self.b + self.c
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum AreaFamily {
    FixedLeg { a: f64 },
    FixedPerimeter { perimeter: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AreaValue {
    pub area: f64,
    pub family: AreaFamily,
}

impl AreaValue {
    fn fixed_leg(a: f64, area: f64) -> Self {
        AreaValue {
            area,
            family: AreaFamily::FixedLeg { a },
        }
    }

    fn fixed_perimeter(perimeter: f64, area: f64) -> Self {
        AreaValue {
            area,
            family: AreaFamily::FixedPerimeter { perimeter },
        }
    }
}

/// Fails with the exclusion when `(γ, n)` has no real vertex angle.
fn require_real(gamma: SideRatio, n: Degree) -> Result<()> {
    vertex_angle(gamma, n).real().map(|_| ())
}

/// `(γ^n + 1)^(1/n)`, i.e. `c/a`.
fn third_side_ratio(gamma: SideRatio, n: Degree) -> f64 {
    pow_sum_root(gamma.value(), n.value(), 1.0)
}

/// `4γ² − [γ² + 1 − (γ^n + 1)^(2/n)]²`, clamped at zero near degeneracy.
fn radicand(gamma: SideRatio, n: Degree) -> f64 {
    let g = gamma.value();
    let bracket = vertex_bracket(gamma, n);
    let r = (2.0 * g - bracket) * (2.0 * g + bracket);
    clamp_radicand(r, 4.0 * g * g)
}

fn clamp_radicand(r: f64, scale: f64) -> f64 {
    if r < 0.0 && r >= -RADICAND_CLAMP * scale.max(1.0) {
        0.0
    } else {
        r
    }
}

pub fn side_lengths(a: f64, gamma: SideRatio, n: Degree) -> Result<TriangleSides> {
    let a = check_length("leg a", a)?;
    require_real(gamma, n)?;
    Ok(TriangleSides {
        a,
        b: gamma.value() * a,
        c: a * third_side_ratio(gamma, n),
    })
}

/// `½ a² γ sin θ`.
pub fn area_from_angle(a: f64, gamma: SideRatio, theta: f64) -> Result<AreaValue> {
    let a = check_length("leg a", a)?;
    if !(0.0..=std::f64::consts::PI).contains(&theta) {
        return Err(Error::OutOfDomain {
            what: "vertex angle",
            requirement: "0 <= theta <= pi",
            value: theta,
        });
    }
    Ok(AreaValue::fixed_leg(
        a,
        0.5 * a * a * gamma.value() * theta.sin(),
    ))
}

/// `(a/2)² √(4γ² − [γ² + 1 − (γ^n + 1)^(2/n)]²)`.
pub fn area_fixed_leg(a: f64, gamma: SideRatio, n: Degree) -> Result<AreaValue> {
    let a = check_length("leg a", a)?;
    require_real(gamma, n)?;
    let half = 0.5 * a;
    Ok(AreaValue::fixed_leg(
        a,
        half * half * radicand(gamma, n).sqrt(),
    ))
}

/// `a (γ + 1 + (γ^n + 1)^(1/n))`.
pub fn perimeter(a: f64, gamma: SideRatio, n: Degree) -> Result<f64> {
    let a = check_length("leg a", a)?;
    require_real(gamma, n)?;
    Ok(a * (gamma.value() + 1.0 + third_side_ratio(gamma, n)))
}

/// Area at fixed perimeter:
/// `{P / (2[γ + 1 + (γ^n + 1)^(1/n)])}² √(4γ² − [γ² + 1 − (γ^n + 1)^(2/n)]²)`.
pub fn area_fixed_perimeter(p: f64, gamma: SideRatio, n: Degree) -> Result<AreaValue> {
    let p = check_length("perimeter", p)?;
    require_real(gamma, n)?;
    let scale = p / (2.0 * (gamma.value() + 1.0 + third_side_ratio(gamma, n)));
    Ok(AreaValue::fixed_perimeter(
        p,
        scale * scale * radicand(gamma, n).sqrt(),
    ))
}

/// Isosceles (`γ = 1`) member of the fixed-perimeter family:
/// `(P²/16) √(4^((n+1)/n) − 16^(1/n)) / (1 + 2^((1−n)/n))²`.
pub fn area_max_fixed_perimeter_isosceles(p: f64, n: Degree) -> Result<AreaValue> {
    let p = check_length("perimeter", p)?;
    if n.is_fractional() {
        return Err(Error::FractionalDegree(n.value()));
    }
    let nv = n.value();
    let r = 4f64.powf((nv + 1.0) / nv) - 16f64.powf(1.0 / nv);
    let r = clamp_radicand(r, 4.0);
    let denom = 1.0 + 2f64.powf((1.0 - nv) / nv);
    Ok(AreaValue::fixed_perimeter(
        p,
        p * p / 16.0 * r.sqrt() / (denom * denom),
    ))
}

/// `n -> +∞` fixed-perimeter area `¼ √(4γ² − 1) / (2γ + 1)² · P²`.
pub fn area_limit_pos_inf_fixed_perimeter(p: f64, gamma: SideRatio) -> Result<AreaValue> {
    let p = check_length("perimeter", p)?;
    let g = gamma.value();
    let s = 2.0 * g + 1.0;
    Ok(AreaValue::fixed_perimeter(
        p,
        0.25 * (4.0 * g * g - 1.0).sqrt() / (s * s) * p * p,
    ))
}

fn check_below_two(gamma: SideRatio) -> Result<f64> {
    let g = gamma.value();
    if g >= 2.0 {
        return Err(Error::RatioAtLeastTwo(g));
    }
    if g < 1.0 {
        return Err(Error::RatioBelowOne(g));
    }
    Ok(g)
}

/// `n -> −∞` fixed-perimeter area `¼ γ/(γ + 2)² √(4 − γ²) · P²`.
pub fn area_limit_neg_inf_fixed_perimeter(p: f64, gamma: SideRatio) -> Result<AreaValue> {
    let p = check_length("perimeter", p)?;
    let g = check_below_two(gamma)?;
    let s = g + 2.0;
    Ok(AreaValue::fixed_perimeter(
        p,
        0.25 * g / (s * s) * (4.0 - g * g).sqrt() * p * p,
    ))
}

/// Isosceles fixed-leg area `a² 2^((1−n)/n) (1 − 4^((1−n)/n))^½`, defined
/// for `n ≥ 1` and `n ≤ −1`.
pub fn area_isosceles_extremal(a: f64, n: Degree) -> Result<AreaValue> {
    let a = check_length("leg a", a)?;
    let nv = n.value();
    if nv < 1.0 && nv > -1.0 {
        return Err(Error::OutOfDomain {
            what: "isosceles extremal area",
            requirement: "n >= 1 or n <= -1",
            value: nv,
        });
    }
    let e = (1.0 - nv) / nv;
    let r = clamp_radicand(1.0 - 4f64.powf(e), 1.0);
    Ok(AreaValue::fixed_leg(a, a * a * 2f64.powf(e) * r.sqrt()))
}

/// `n -> −∞` fixed-leg area `¼ a² γ √(4 − γ²)`.
pub fn area_limit_neg_inf_fixed_leg(a: f64, gamma: SideRatio) -> Result<AreaValue> {
    let a = check_length("leg a", a)?;
    let g = check_below_two(gamma)?;
    Ok(AreaValue::fixed_leg(
        a,
        0.25 * a * a * g * (4.0 - g * g).sqrt(),
    ))
}

/// `[γ² + 1 − (γ^n + 1)^(2/n)] · [γ^n/(γ^n + 1) ln γ − (1/n) ln(γ^n + 1)]`,
/// the reduced form of `∂A/∂n = 0`.
///
/// `∂A/∂n = (a/2)² (2X/n) · residual / √radicand` with `X = (γ^n + 1)^(2/n)`,
/// so for `n > 0` the residual carries the sign of `∂A/∂n`.
pub fn area_dn_stationarity_residual(gamma: SideRatio, n: Degree) -> Result<f64> {
    require_real(gamma, n)?;
    let g = gamma.value();
    let nv = n.value();
    let first = vertex_bracket(gamma, n);
    Ok(first * dn_second_factor(g, nv))
}

/// `γ^n/(γ^n + 1) ln γ − (1/n) ln(γ^n + 1)` rewritten in `t = e^(−|n ln γ|)`
/// so both terms share a sign; the direct form cancels to noise once
/// `γ^n` is large.
fn dn_second_factor(g: f64, n: f64) -> f64 {
    let lg = g.ln();
    let u = n * lg;
    if u >= 0.0 {
        let t = (-u).exp();
        -(lg * t / (1.0 + t) + t.ln_1p() / n)
    } else {
        let t = u.exp();
        lg * t / (1.0 + t) - t.ln_1p() / n
    }
}

/// `[γ² + 1 − (γ^n + 1)^(2/n)] · [1 − γ^(n−2) (γ^n + 1)^((2/n)−1)] − 4`.
pub fn area_dgamma_condition_residual(gamma: SideRatio, n: Degree) -> Result<f64> {
    require_real(gamma, n)?;
    let g = gamma.value();
    let nv = n.value();
    let first = vertex_bracket(gamma, n);
    // γ^(n−2) (γ^n + 1)^(2/n − 1) = γ^n/(γ^n + 1) · (γ^n + 1)^(2/n) / γ²
    let second = 1.0 - pow_fraction(g, nv) * pow_sum_root(g, nv, 2.0) / (g * g);
    Ok(first * second - 4.0)
}
