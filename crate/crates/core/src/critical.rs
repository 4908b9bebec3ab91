//! Critical degree `n_crit(γ)` for `1 < γ < 2`: the least-negative degree
//! that still yields a real vertex angle. It is the root of
//!
//! ```text
//! (γ^n + 1)^(1/n) − (γ − 1) = 0,   n < 0
//! ```
//!
//! The residual is positive on the real side (`n < n_crit`) and tends to
//! `−(γ − 1)` as `n -> 0⁻`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use serde::Serialize;

use crate::angle::{Degree, SideRatio};
use crate::error::{check_tolerance, Error, Result};
use crate::power::pow_sum_root;
use crate::tolerance::DEFAULT_ROOT_TOL;

/// Bracket expansion stops here.
pub const BRACKET_FLOOR: f64 = -1e6;

const INITIAL_BRACKET: (f64, f64) = (-1.0, -0.5);
const MAX_HALVINGS: usize = 1100;
const MAX_BISECTIONS: usize = 200;
const SCAN_POINTS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CriticalDegree {
    pub gamma: SideRatio,
    pub n_crit: f64,
    pub residual: f64,
    /// Sign-change bracket found by the expansion, before bisection.
    pub bracket: (f64, f64),
}

fn check_open_ratio(gamma: SideRatio) -> Result<f64> {
    let g = gamma.value();
    if g < 1.0 {
        return Err(Error::OutOfDomain {
            what: "critical degree",
            requirement: "1 < gamma < 2",
            value: g,
        });
    }
    if g == 1.0 {
        return Err(Error::NoCriticalDegree);
    }
    if g >= 2.0 {
        return Err(Error::RatioAtLeastTwo(g));
    }
    Ok(g)
}

/// `(γ^n + 1)^(1/n) − (γ − 1)` for `1 < γ < 2`, `n < 0`.
pub fn ncrit_residual(gamma: SideRatio, n: Degree) -> Result<f64> {
    let g = check_open_ratio(gamma)?;
    if n.value() > 0.0 {
        return Err(Error::OutOfDomain {
            what: "critical-degree residual",
            requirement: "n < 0",
            value: n.value(),
        });
    }
    Ok(residual(g, n.value()))
}

fn residual(g: f64, n: f64) -> f64 {
    pow_sum_root(g, n, 1.0) - (g - 1.0)
}

type CacheKey = (u64, u64);

fn cache() -> &'static RwLock<HashMap<CacheKey, CriticalDegree>> {
    static CACHE: OnceLock<RwLock<HashMap<CacheKey, CriticalDegree>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Memoized [`solve_ncrit_uncached`], keyed on the bit patterns of `γ` and
/// `tol_root`. Only successful solves are cached.
pub fn solve_ncrit(gamma: SideRatio, tol_root: f64) -> Result<CriticalDegree> {
    let key = (gamma.value().to_bits(), tol_root.to_bits());
    if let Some(hit) = cache().read().ok().and_then(|m| m.get(&key).copied()) {
        return Ok(hit);
    }
    let solved = solve_ncrit_uncached(gamma, tol_root)?;
    if let Ok(mut m) = cache().write() {
        m.insert(key, solved);
    }
    Ok(solved)
}

pub fn solve_ncrit_uncached(gamma: SideRatio, tol_root: f64) -> Result<CriticalDegree> {
    let g = check_open_ratio(gamma)?;
    let tol = check_tolerance(tol_root)?;
    let f = |n: f64| residual(g, n);

    let (mut lo, mut hi) = INITIAL_BRACKET;
    let mut f_hi = f(hi);
    let mut halvings = 0;
    while f_hi >= 0.0 {
        lo = hi;
        hi /= 2.0;
        f_hi = f(hi);
        halvings += 1;
        if halvings > MAX_HALVINGS || hi == 0.0 {
            return Err(Error::InconclusiveBracket {
                gamma: g,
                floor: hi,
            });
        }
    }
    let mut f_lo = f(lo);
    while f_lo <= 0.0 {
        if lo <= BRACKET_FLOOR {
            return Err(Error::InconclusiveBracket {
                gamma: g,
                floor: BRACKET_FLOOR,
            });
        }
        hi = lo;
        lo = (lo * 2.0).max(BRACKET_FLOOR);
        f_lo = f(lo);
    }
    let bracket = (lo, hi);

    let changes = sign_changes(&f, lo, hi);
    if changes != 1 {
        return Err(Error::NonUniqueRoot {
            gamma: g,
            sign_changes: changes,
        });
    }

    // lo stays on the real side (residual >= 0) throughout.
    for _ in 0..MAX_BISECTIONS {
        if f_lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid >= 0.0 {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    if f_lo > tol {
        return Err(Error::ToleranceUnreachable {
            gamma: g,
            achieved: f_lo,
            tol,
        });
    }
    Ok(CriticalDegree {
        gamma,
        n_crit: lo,
        residual: f_lo,
        bracket,
    })
}

/// Sign changes of `f` on a geometric grid spanning well beyond the bracket.
fn sign_changes(f: &impl Fn(f64) -> f64, lo: f64, hi: f64) -> usize {
    let far = (lo * 4.0).max(BRACKET_FLOOR).abs().max(lo.abs());
    let near = (hi / 4.0).abs();
    let ratio = (far / near).ln();
    let mut changes = 0;
    let mut prev: Option<bool> = None;
    for i in 0..SCAN_POINTS {
        let t = i as f64 / (SCAN_POINTS - 1) as f64;
        let n = -near * (ratio * t).exp();
        let positive = f(n) >= 0.0;
        if let Some(p) = prev {
            if p != positive {
                changes += 1;
            }
        }
        prev = Some(positive);
    }
    changes
}

/// Whether `(γ, n)` has a real vertex angle, decided from the regime and
/// the solved critical degree rather than from the cosine argument.
pub fn is_real_domain(gamma: SideRatio, n: Degree) -> bool {
    is_real_domain_with(gamma, n, DEFAULT_ROOT_TOL)
}

pub fn is_real_domain_with(gamma: SideRatio, n: Degree, tol_root: f64) -> bool {
    let nv = n.value();
    if nv >= 1.0 {
        return true;
    }
    if nv > 0.0 {
        return false;
    }
    let g = gamma.canonical();
    if g == 1.0 {
        return true;
    }
    if g >= 2.0 {
        return false;
    }
    let canonical = SideRatio::new(g).expect("canonical ratio is >= 1");
    match solve_ncrit(canonical, tol_root) {
        Ok(c) => nv <= c.n_crit,
        Err(_) => false,
    }
}
