//! Real-exponent Pythagorean triangles: `a^n + b^n = c^n` for any real
//! `n ≠ 0`, reconciled with the Law of Cosines.
//!
//! * [`angle`]: the vertex angle `θ(γ, n)`, its real domain, extremes and
//!   infinite-degree limits.
//! * [`critical`]: the critical degree `n_crit(γ)` bounding the real domain
//!   for negative exponents.
//! * [`area`]: triangle areas at fixed leg or fixed perimeter.
//! * [`sweep`], [`figures`]: tabulation over `(γ, n)` grids, with presets
//!   for the published figures.
//! * [`verify`]: independent oracles and a report that checks each
//!   published claim against them.

pub mod angle;
pub mod area;
pub mod critical;
pub mod error;
pub mod figures;
pub mod format;
mod power;
pub mod sweep;
pub mod tolerance;
pub mod verify;

pub use angle::{
    angle_stationarity_residual, classify_triangle, cos_vertex_arg, extremal_isosceles_angle,
    limit_angle_neg_inf, limit_angle_pos_inf, vertex_angle, vertex_angle_with, AngleOutcome,
    Degree, Exclusion, SideRatio, TriangleClass,
};
pub use area::{
    area_dgamma_condition_residual, area_dn_stationarity_residual, area_fixed_leg,
    area_fixed_perimeter, area_from_angle, area_isosceles_extremal, area_limit_neg_inf_fixed_leg,
    area_limit_neg_inf_fixed_perimeter, area_limit_pos_inf_fixed_perimeter,
    area_max_fixed_perimeter_isosceles, perimeter, side_lengths, AreaFamily, AreaValue,
    TriangleSides,
};
pub use critical::{
    is_real_domain, is_real_domain_with, ncrit_residual, solve_ncrit, solve_ncrit_uncached,
    CriticalDegree,
};
pub use error::{Error, Result};
pub use format::fmt_g17;
pub use sweep::{SweepSpec, SweepTable};
pub use tolerance::Tolerances;
pub use verify::{run_claims_report, ClaimRecord, ClaimStatus, ClaimsReport};
