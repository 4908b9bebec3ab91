//! Independent checks: each computes its quantity along a path that does
//! not go through the formula it is used to test.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::angle::{vertex_angle, Degree, SideRatio};
use crate::area::{side_lengths, TriangleSides};
use crate::critical::solve_ncrit;
use crate::error::{Error, Result};
use crate::tolerance::DEFAULT_ROOT_TOL;

/// Slack on the triangle inequality before [`heron_area`] refuses the sides.
pub const TRIANGLE_SLACK: f64 = 1e-9;

/// Heron's area in Kahan's cancellation-free arrangement.
pub fn heron_area(sides: &TriangleSides) -> Result<f64> {
    let mut s = [sides.a, sides.b, sides.c];
    if s.iter().any(|x| !x.is_finite() || *x < 0.0) {
        return Err(Error::TriangleInequality {
            a: sides.a,
            b: sides.b,
            c: sides.c,
        });
    }
    s.sort_by(|x, y| y.total_cmp(x));
    let [a, b, c] = s;
    // a >= b >= c; the only inequality that can fail is a <= b + c
    let excess = a - (b + c);
    if excess > TRIANGLE_SLACK * a {
        return Err(Error::TriangleInequality {
            a: sides.a,
            b: sides.b,
            c: sides.c,
        });
    }
    let p = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
    Ok(0.25 * p.max(0.0).sqrt())
}

/// `|c² − (a² + b² − 2ab cos θ)| / c²` with `c` from `a^n + b^n = c^n` and
/// `θ` from the vertex-angle formula.
pub fn law_of_cosines_residual(a: f64, gamma: SideRatio, n: Degree) -> Result<f64> {
    let s = side_lengths(a, gamma, n)?;
    let theta = vertex_angle(gamma, n).real()?;
    let rhs = s.a * s.a + s.b * s.b - 2.0 * s.a * s.b * theta.cos();
    let c2 = s.c * s.c;
    Ok((c2 - rhs).abs() / c2)
}

/// Default central-difference step `1e-6 · max(1, |x|)`.
pub fn default_step(x: f64) -> f64 {
    1e-6 * x.abs().max(1.0)
}

/// Central difference `(f(x+h) − f(x−h)) / 2h`.
pub fn finite_difference<F>(f: F, x: f64, h: Option<f64>) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let h = h.unwrap_or_else(|| default_step(x));
    let hi = f(x + h);
    let lo = f(x - h);
    if !hi.is_finite() {
        return Err(Error::NonFiniteEvaluation(x + h));
    }
    if !lo.is_finite() {
        return Err(Error::NonFiniteEvaluation(x - h));
    }
    Ok((hi - lo) / (2.0 * h))
}

/// `steps` evenly spaced points from `lo` to `hi`, endpoints exact.
pub fn linspace(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let last = steps - 1;
            (0..steps)
                .map(|i| {
                    if i == last {
                        hi
                    } else {
                        lo + (hi - lo) * (i as f64 / last as f64)
                    }
                })
                .collect()
        }
    }
}

/// Location and value of a grid extremum, refined by a parabola through the
/// best point and its neighbours when it is interior.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridExtremum {
    pub index: usize,
    pub x: f64,
    pub value: f64,
}

/// Maximum of `values` over `xs`, skipping `None` cells.
pub fn grid_argmax(xs: &[f64], values: &[Option<f64>]) -> Option<GridExtremum> {
    let (index, value) = values
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.map(|v| (i, v)))
        .fold(None, |best: Option<(usize, f64)>, (i, v)| match best {
            Some((_, bv)) if bv >= v => best,
            _ => Some((i, v)),
        })?;
    let interior = index > 0 && index + 1 < xs.len();
    let neighbours = interior
        .then(|| values[index - 1].zip(values[index + 1]))
        .flatten();
    let Some((left, right)) = neighbours else {
        return Some(GridExtremum {
            index,
            x: xs[index],
            value,
        });
    };
    let (x0, x1, x2) = (xs[index - 1], xs[index], xs[index + 1]);
    // vertex of the parabola through (x0,left), (x1,value), (x2,right)
    let num = (x1 - x0).powi(2) * (value - right) - (x2 - x1).powi(2) * (value - left);
    let den = 2.0 * ((x1 - x0) * (value - right) + (x2 - x1) * (value - left));
    let x = if den != 0.0 { x1 - num / den } else { x1 };
    Some(GridExtremum {
        index,
        x: x.clamp(x0, x2),
        value,
    })
}

/// Minimum counterpart of [`grid_argmax`].
pub fn grid_argmin(xs: &[f64], values: &[Option<f64>]) -> Option<GridExtremum> {
    let neg: Vec<Option<f64>> = values.iter().map(|v| v.map(|x| -x)).collect();
    grid_argmax(xs, &neg).map(|e| GridExtremum {
        value: -e.value,
        ..e
    })
}

/// Seeded generator of `(a, γ, n)` triples with a real vertex angle.
///
/// Half the draws take `γ ∈ [1, 10]`, `n ∈ [1, 50]`; the other half take
/// `γ ∈ [1, 1.99]` and `n` uniform between `−50` and `n_crit(γ)`.
pub struct InDomainSampler {
    rng: ChaCha8Rng,
}

impl InDomainSampler {
    pub fn new(seed: u64) -> Self {
        InDomainSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn draw(&mut self) -> (f64, SideRatio, Degree) {
        let a = self.rng.random_range(0.1..10.0);
        if self.rng.random_bool(0.5) {
            let g = self.rng.random_range(1.0..10.0);
            let n = self.rng.random_range(1.0..50.0);
            (a, ratio(g), degree(n))
        } else {
            let g = self.rng.random_range(1.0..1.99);
            let top = if g == 1.0 {
                -1e-3
            } else {
                solve_ncrit(ratio(g), DEFAULT_ROOT_TOL)
                    .map(|c| c.n_crit)
                    .unwrap_or(-50.0)
            };
            let n = self.rng.random_range(-50.0..top);
            (a, ratio(g), degree(n))
        }
    }
}

pub(crate) fn ratio(g: f64) -> SideRatio {
    SideRatio::excluded_regime(g).expect("grid ratios are positive and finite")
}

pub(crate) fn degree(n: f64) -> Degree {
    Degree::new(n).expect("grid degrees are nonzero and finite")
}
