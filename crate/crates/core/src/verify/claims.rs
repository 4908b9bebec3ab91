//! Registered claims and their adjudication.
//!
//! Every claim runs a fixed grid or a seeded sample through an oracle that
//! takes a different computational route from the formula under test, and
//! reduces the comparison to one worst-case residual.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::hp::HighPrecision;
use super::oracles::{
    degree, finite_difference, grid_argmax, grid_argmin, heron_area, law_of_cosines_residual,
    linspace, ratio, InDomainSampler,
};
use super::report::{adjudicate, ClaimRecord, ClaimsReport, Witness, REPORT_VERSION};
use crate::angle::{
    angle_stationarity_residual, extremal_isosceles_angle, limit_angle_neg_inf,
    limit_angle_pos_inf, vertex_angle,
};
use crate::area::{
    area_dgamma_condition_residual, area_dn_stationarity_residual, area_fixed_leg,
    area_fixed_perimeter, area_from_angle, area_isosceles_extremal, area_limit_neg_inf_fixed_leg,
    area_limit_neg_inf_fixed_perimeter, area_limit_pos_inf_fixed_perimeter,
    area_max_fixed_perimeter_isosceles, side_lengths, TriangleSides,
};
use crate::critical::solve_ncrit;
use crate::tolerance::{DEFAULT_ROOT_TOL, INFINITE_DEGREE_SURROGATE};

const INF_N: f64 = INFINITE_DEGREE_SURROGATE;
const GRID: usize = 2001;

struct Claim {
    id: &'static str,
    oracle: &'static str,
    grid: &'static str,
    run: fn() -> Finding,
}

struct Finding {
    worst: f64,
    tol: f64,
    witness: Witness,
    hp: Option<f64>,
    evaluations: BTreeMap<String, f64>,
}

impl Finding {
    fn new(worst: f64, tol: f64, witness: Witness) -> Self {
        Finding {
            worst,
            tol,
            witness,
            hp: None,
            evaluations: BTreeMap::new(),
        }
    }

    fn from_worst(w: Worst, tol: f64) -> Self {
        Finding::new(w.value, tol, w.witness)
    }

    fn eval(mut self, name: &str, value: f64) -> Self {
        self.evaluations.insert(name.to_string(), value);
        self
    }

    fn with_hp(mut self, value: f64) -> Self {
        self.hp = Some(value);
        self
    }

    /// Re-evaluates at 320 bits only when the float residual fails.
    fn confirm(mut self, check: impl FnOnce(&mut HighPrecision, &Witness) -> f64) -> Self {
        if self.worst.is_nan() || self.worst > self.tol {
            let mut hp = HighPrecision::new();
            self.hp = Some(check(&mut hp, &self.witness));
        }
        self
    }
}

/// Running maximum with the parameters where it occurred. A NaN sticks.
struct Worst {
    value: f64,
    witness: Witness,
}

impl Worst {
    fn new() -> Self {
        Worst {
            value: f64::NEG_INFINITY,
            witness: Witness::default(),
        }
    }

    fn push(&mut self, value: f64, witness: Witness) {
        if self.value.is_nan() {
            return;
        }
        if value.is_nan() || value > self.value {
            self.value = value;
            self.witness = witness;
        }
    }
}

/// Count of failed checks, keeping the first failure as witness.
#[derive(Default)]
struct Violations {
    count: usize,
    first: Option<Witness>,
}

impl Violations {
    fn check(&mut self, ok: bool, witness: Witness) {
        if !ok {
            self.count += 1;
            self.first.get_or_insert(witness);
        }
    }

    fn finding(self) -> Finding {
        Finding::new(self.count as f64, 0.0, self.first.unwrap_or_default())
    }
}

fn theta(g: f64, n: f64) -> Option<f64> {
    vertex_angle(ratio(g), degree(n)).theta()
}

fn or_nan<E>(r: Result<f64, E>) -> f64 {
    r.unwrap_or(f64::NAN)
}

fn heron_fixed_leg(a: f64, g: f64, n: f64) -> Option<f64> {
    let s = side_lengths(a, ratio(g), degree(n)).ok()?;
    heron_area(&s).ok()
}

fn heron_fixed_perimeter(p: f64, g: f64, n: f64) -> Option<f64> {
    let s = side_lengths(1.0, ratio(g), degree(n)).ok()?;
    let k = p / s.perimeter();
    heron_area(&TriangleSides {
        a: s.a * k,
        b: s.b * k,
        c: s.c * k,
    })
    .ok()
}

fn equilateral(side: f64) -> f64 {
    heron_area(&TriangleSides {
        a: side,
        b: side,
        c: side,
    })
    .expect("equilateral sides")
}

fn ncrit(g: f64) -> Option<f64> {
    solve_ncrit(ratio(g), DEFAULT_ROOT_TOL)
        .ok()
        .map(|c| c.n_crit)
}

fn rel(x: f64, reference: f64) -> f64 {
    (x - reference).abs() / reference.abs()
}

fn positive_gammas() -> Vec<f64> {
    linspace(1.0, 20.0, GRID)
}

fn negative_gammas() -> Vec<f64> {
    linspace(1.0, 1.99, GRID)
}

// ---------------------------------------------------------------- angles

fn law_of_cosines() -> Finding {
    let mut sampler = InDomainSampler::new(0x5eed_0002);
    let mut worst = Worst::new();
    for _ in 0..2000 {
        let (a, g, n) = sampler.draw();
        let r = or_nan(law_of_cosines_residual(a, g, n));
        worst.push(r, Witness::at(g.value(), n.value()).with_a(a));
    }
    Finding::from_worst(worst, 1e-10)
}

fn degrees_one_and_two() -> Finding {
    let mut worst = Worst::new();
    for g in linspace(1.0, 100.0, GRID) {
        let t1 = theta(g, 1.0).map_or(f64::NAN, |t| (t - PI).abs());
        let t2 = theta(g, 2.0).map_or(f64::NAN, |t| (t - FRAC_PI_2).abs());
        let s1 = side_lengths(1.0, ratio(g), degree(1.0)).map(|s| rel(s.a + s.b, s.c));
        let s2 =
            side_lengths(1.0, ratio(g), degree(2.0)).map(|s| rel(s.a * s.a + s.b * s.b, s.c * s.c));
        worst.push(t1.max(or_nan(s1)), Witness::at(g, 1.0));
        worst.push(t2.max(or_nan(s2)), Witness::at(g, 2.0));
    }
    Finding::from_worst(worst, 1e-9)
}

fn obtuse_and_acute() -> Finding {
    let mut v = Violations::default();
    let mut ns = linspace(1.01, 1.99, 50);
    ns.extend(linspace(2.01, 50.0, 100));
    for g in linspace(1.0, 20.0, 96) {
        for &n in &ns {
            let w = Witness::at(g, n);
            let Ok(s) = side_lengths(1.0, ratio(g), degree(n)) else {
                v.check(false, w);
                continue;
            };
            let obtuse_by_sides = s.c * s.c > s.a * s.a + s.b * s.b;
            let obtuse_by_angle = theta(g, n).is_some_and(|t| t > FRAC_PI_2);
            v.check(obtuse_by_sides == (n < 2.0), w);
            v.check(obtuse_by_angle == obtuse_by_sides, w);
        }
    }
    v.finding()
}

fn angle_stationary_only_at_one() -> Finding {
    let mut v = Violations::default();
    let cases: [(f64, Vec<f64>); 9] = [
        (1.2, positive_gammas()),
        (1.5, positive_gammas()),
        (1.8, positive_gammas()),
        (3.0, positive_gammas()),
        (5.0, positive_gammas()),
        (10.0, positive_gammas()),
        (-1.0, negative_gammas()),
        (-2.0, negative_gammas()),
        (-5.0, negative_gammas()),
    ];
    for (n, gammas) in cases.iter() {
        let n = *n;
        let f = |g: f64| theta(g, n).unwrap_or(f64::NAN);
        let at_one = finite_difference(f, 1.0, None).map_or(f64::NAN, f64::abs);
        v.check(at_one <= 1e-6, Witness::at(1.0, n));
        for &g in &gammas[1..] {
            if theta(g, n).is_none_or(|t| t < 1e-3) {
                continue;
            }
            let Ok(fd) = finite_difference(f, g, None) else {
                continue;
            };
            let r = angle_stationarity_residual(ratio(g), degree(n));
            let w = Witness::at(g, n);
            v.check(r != 0.0, w);
            if fd.abs() > 1e-8 {
                v.check(fd.signum() == r.signum(), w);
            }
        }
    }
    v.finding()
}

/// `max(0, grid extreme beyond the formula) + |θ(1, n) − formula|` over
/// the listed degrees; `sign` is +1 for a maximum and −1 for a minimum.
fn isosceles_extreme(degrees: &[f64], gammas: &[f64], sign: f64) -> Finding {
    let mut worst = Worst::new();
    for &n in degrees {
        let formula = or_nan(extremal_isosceles_angle(degree(n)));
        let values: Vec<Option<f64>> = gammas.iter().map(|&g| theta(g, n)).collect();
        let ext = if sign > 0.0 {
            grid_argmax(gammas, &values)
        } else {
            grid_argmin(gammas, &values)
        };
        let beyond = ext.map_or(f64::NAN, |e| (sign * (e.value - formula)).max(0.0));
        let at_one = theta(1.0, n).map_or(f64::NAN, |t| (t - formula).abs());
        worst.push(beyond + at_one, Witness::at(1.0, n));
    }
    Finding::from_worst(worst, 1e-9)
}

fn max_angle_isosceles() -> Finding {
    isosceles_extreme(&linspace(1.0, 2.0, 11), &positive_gammas(), 1.0)
}

fn min_angle_isosceles() -> Finding {
    let ns = [2.0, 2.5, 3.0, 5.0, 7.0, 10.0, 20.0, 50.0, 100.0];
    isosceles_extreme(&ns, &positive_gammas(), -1.0)
}

fn positive_infinite_limit() -> Finding {
    let mut worst = Worst::new();
    for g in [0.3, 0.5, 0.8, 1.0, 1.5, 2.0, 3.0, 10.0, 100.0] {
        let t = theta(g, INF_N).unwrap_or(f64::NAN);
        let lim = limit_angle_pos_inf(ratio(g));
        worst.push((t - lim).abs(), Witness::at(g, INF_N));
    }
    Finding::from_worst(worst, 1e-4)
}

fn isosceles_all_negative() -> Finding {
    let mut v = Violations::default();
    let mut hp = HighPrecision::new();
    for e in linspace(-3.0, 6.0, 500) {
        let n = -(10f64.powf(e));
        let w = Witness::at(1.0, n);
        v.check(theta(1.0, n).is_some(), w);
        v.check(hp.cos_arg_cmp_one(1.0, n).is_lt(), w);
    }
    v.finding()
}

fn critical_degree_root() -> Finding {
    let mut worst = Worst::new();
    let mut hp = HighPrecision::new();
    let mut hp_worst = 0f64;
    for g in linspace(1.01, 1.99, 50) {
        let Some(nc) = ncrit(g) else {
            worst.push(f64::NAN, Witness::at(g, f64::NAN));
            continue;
        };
        let r = hp.ncrit_residual(g, nc).abs();
        let real_side = hp.cos_arg_cmp_one(g, nc * (1.0 + 1e-9)).is_le();
        let excluded_side = hp.cos_arg_cmp_one(g, nc * (1.0 - 1e-9)).is_gt();
        let misses = (!real_side) as u8 + (!excluded_side) as u8;
        hp_worst = hp_worst.max(r);
        worst.push(r + f64::from(misses), Witness::at(g, nc));
    }
    Finding::from_worst(worst, 1e-10).with_hp(hp_worst)
}

fn collapse_at_critical_degree() -> Finding {
    let mut worst = Worst::new();
    let mut hp = HighPrecision::new();
    for g in linspace(1.01, 1.99, 50) {
        let Some(nc) = ncrit(g) else {
            worst.push(f64::NAN, Witness::at(g, f64::NAN));
            continue;
        };
        let t = theta(g, nc).unwrap_or(f64::NAN);
        let t_hp = hp.vertex_angle(g, nc).unwrap_or(f64::NAN);
        worst.push(t.max(t_hp), Witness::at(g, nc));
    }
    Finding::from_worst(worst, 1e-4)
}

fn ratio_at_least_two() -> Finding {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0ca2);
    let mut samples: Vec<(f64, f64)> = (0..1000)
        .map(|_| (rng.random_range(2.0..10.0), rng.random_range(-30.0..-0.05)))
        .collect();
    samples.extend([(2.0, -0.05), (2.0, -1.0), (2.0, -30.0)]);
    let mut v = Violations::default();
    let mut hp = HighPrecision::new();
    let mut min_excess = f64::INFINITY;
    for &(g, n) in &samples {
        let w = Witness::at(g, n);
        v.check(theta(g, n).is_none(), w);
        min_excess = min_excess.min(hp.cos_arg_minus_one(g, n));
        v.check(hp.cos_arg_cmp_one(g, n).is_gt(), w);
    }
    v.finding()
        .eval("samples", samples.len() as f64)
        .eval("min_hp_cos_arg_minus_one", min_excess)
}

fn equal_negative_angles() -> Finding {
    let mut worst = Worst::new();
    for g in negative_gammas() {
        if let (Some(t1), Some(t2)) = (theta(g, -1.0), theta(g, -2.0)) {
            worst.push((t1 - t2).abs(), Witness::at(g, -1.0));
        }
    }
    let g = worst.witness.gamma.unwrap_or(1.0);
    Finding::from_worst(worst, 1e-9)
        .eval("theta_n_minus_1", theta(g, -1.0).unwrap_or(f64::NAN))
        .eval("theta_n_minus_2", theta(g, -2.0).unwrap_or(f64::NAN))
        .confirm(|hp, w| {
            let g = w.gamma.unwrap_or(1.0);
            let a = hp.vertex_angle(g, -1.0).unwrap_or(f64::NAN);
            let b = hp.vertex_angle(g, -2.0).unwrap_or(f64::NAN);
            (a - b).abs()
        })
}

fn max_angle_isosceles_negative() -> Finding {
    let ns = [-0.5, -1.0, -1.5, -2.0, -3.0, -5.0, -10.0, -30.0];
    isosceles_extreme(&ns, &negative_gammas(), 1.0)
}

fn negative_infinite_limit() -> Finding {
    let mut worst = Worst::new();
    for g in [1.0, 1.1, 1.3, 1.5, 1.8, 1.95] {
        let t = theta(g, -INF_N).unwrap_or(f64::NAN);
        let lim = or_nan(limit_angle_neg_inf(ratio(g)));
        worst.push((t - lim).abs(), Witness::at(g, -INF_N));
    }
    Finding::from_worst(worst, 1e-4)
}

// ----------------------------------------------------------------- areas

fn fixed_leg_area() -> Finding {
    let mut sampler = InDomainSampler::new(0x5eed_0016);
    let mut worst = Worst::new();
    for _ in 0..10_000 {
        let (a, g, n) = sampler.draw();
        let formula = area_fixed_leg(a, g, n).map(|v| v.area);
        let heron = heron_fixed_leg(a, g.value(), n.value());
        let r = match (formula, heron) {
            (Ok(f), Some(h)) => rel(f, h),
            _ => f64::NAN,
        };
        worst.push(r, Witness::at(g.value(), n.value()).with_a(a));
    }
    Finding::from_worst(worst, 1e-9)
}

fn right_angle_only_at_two() -> Finding {
    // plain powf, independent of the library's power helpers
    let h = |g: f64, n: f64| (g.powf(n) + 1.0).powf(2.0 / n) - (g * g + 1.0);
    let ns = linspace(0.5, 10.0, GRID);
    let mut worst = Worst::new();
    for g in [1.2, 2.0, 5.0] {
        let vals: Vec<f64> = ns.iter().map(|&n| h(g, n)).collect();
        let brackets: Vec<usize> = (1..ns.len())
            .filter(|&i| vals[i - 1].signum() != vals[i].signum() || vals[i] == 0.0)
            .collect();
        let root = match brackets.as_slice() {
            [i] => {
                let (mut lo, mut hi) = (ns[i - 1], ns[*i]);
                let s_lo = h(g, lo).signum();
                for _ in 0..100 {
                    let mid = 0.5 * (lo + hi);
                    if h(g, mid).signum() == s_lo {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                0.5 * (lo + hi)
            }
            _ => f64::NAN,
        };
        let extra = brackets.len().abs_diff(1) as f64;
        worst.push((root - 2.0).abs() + extra, Witness::at(g, root));
    }
    Finding::from_worst(worst, 1e-9)
}

fn area_peak_at_two() -> Finding {
    let ns = linspace(1.0, 50.0, GRID);
    let mut worst = Worst::new();
    for g in [1.0, 1.5, 2.5, 5.0] {
        let vals: Vec<Option<f64>> = ns
            .iter()
            .map(|&n| {
                area_fixed_leg(1.0, ratio(g), degree(n))
                    .ok()
                    .map(|v| v.area)
            })
            .collect();
        let x = grid_argmax(&ns, &vals).map_or(f64::NAN, |e| e.x);
        worst.push((x - 2.0).abs(), Witness::at(g, x).with_a(1.0));
    }
    Finding::from_worst(worst, 1e-3)
}

fn dn_residual_sign() -> Finding {
    let mut v = Violations::default();
    for g in [1.0, 1.5, 2.5, 5.0] {
        let area = |n: f64| area_fixed_leg(1.0, ratio(g), degree(n)).map_or(f64::NAN, |v| v.area);
        let mut changes = 0;
        let mut prev: Option<f64> = None;
        for n in linspace(1.05, 50.0, 500) {
            let w = Witness::at(g, n).with_a(1.0);
            let r = or_nan(area_dn_stationarity_residual(ratio(g), degree(n)));
            v.check(r.is_finite(), w);
            if let Some(p) = prev {
                if p.signum() != r.signum() {
                    changes += 1;
                }
            }
            prev = Some(r);
            let Ok(fd) = finite_difference(area, n, None) else {
                continue;
            };
            if fd.abs() > 1e-9 && (n - 2.0).abs() > 0.01 {
                v.check(fd.signum() == r.signum(), w);
            }
        }
        v.check(changes == 1, Witness::at(g, 2.0).with_a(1.0));
    }
    v.finding()
}

fn no_gamma_stationary_point() -> Finding {
    let mut v = Violations::default();
    let mut max_residual = f64::NEG_INFINITY;
    let gammas = linspace(1.0, 50.0, 300);
    for n in linspace(1.01, 60.0, 300) {
        let area = |g: f64| area_fixed_leg(1.0, ratio(g), degree(n)).map_or(f64::NAN, |v| v.area);
        for &g in &gammas {
            let w = Witness::at(g, n).with_a(1.0);
            let r = or_nan(area_dgamma_condition_residual(ratio(g), degree(n)));
            max_residual = max_residual.max(r);
            v.check(r < 0.0, w);
            if g > 1.0 {
                let fd = finite_difference(area, g, None).unwrap_or(f64::NAN);
                v.check(fd > 0.0, w);
            }
        }
    }
    v.finding().eval("max_condition_residual", max_residual)
}

fn dgamma_constant() -> Finding {
    let mut worst = Worst::new();
    let mut derived = Vec::new();
    for (g, n) in [(1.5, 3.0), (2.0, 1.5), (3.0, 5.0), (1.2, 10.0)] {
        let nq = or_nan(area_dgamma_condition_residual(ratio(g), degree(n))) + 4.0;
        let area = |x: f64| area_fixed_leg(2.0, ratio(x), degree(n)).map_or(f64::NAN, |v| v.area);
        let fd = finite_difference(area, g, None).unwrap_or(f64::NAN);
        // N = a² + b² − c² over a² at a = 1, from the side lengths
        let lhs = match side_lengths(1.0, ratio(g), degree(n)) {
            Ok(s) => {
                let big_n = s.a * s.a + s.b * s.b - s.c * s.c;
                fd * (4.0 * g * g - big_n * big_n).sqrt() / (2.0 * g)
            }
            Err(_) => f64::NAN,
        };
        derived.push((g, lhs + nq));
        worst.push((lhs - (4.0 - nq)).abs(), Witness::at(g, n).with_a(2.0));
    }
    let g = worst.witness.gamma.unwrap_or(f64::NAN);
    Finding::from_worst(worst, 1e-6)
        .eval("printed_constant", 4.0)
        .eval(
            "derived_constant",
            derived
                .iter()
                .find(|(x, _)| *x == g)
                .map_or(f64::NAN, |(_, c)| *c),
        )
        .confirm(|hp, w| {
            let (g, n) = (w.gamma.unwrap_or(f64::NAN), w.n.unwrap_or(f64::NAN));
            (hp.dgamma_scaled(g, n) - (4.0 - hp.nq(g, n))).abs()
        })
}

/// The printed isosceles minimum-area expression, kept here only as the
/// target of its check.
fn printed_isosceles_area(n: f64) -> f64 {
    2f64.powf((3.0 * n - 2.0) / (2.0 * n)) * (1.0 - 4f64.powf((1.0 - n) / n)).sqrt()
}

fn printed_isosceles_formula() -> Finding {
    let mut worst = Worst::new();
    for n in [1.5, 2.0, 3.0, 5.0, 10.0, 100.0] {
        let heron = heron_fixed_leg(1.0, 1.0, n).unwrap_or(f64::NAN);
        worst.push(
            rel(printed_isosceles_area(n), heron),
            Witness::at(1.0, n).with_a(1.0),
        );
    }
    Finding::from_worst(worst, 1e-9)
        .eval("printed_at_n2", printed_isosceles_area(2.0))
        .eval(
            "derived_at_n2",
            or_nan(area_isosceles_extremal(1.0, degree(2.0)).map(|v| v.area)),
        )
        .eval(
            "heron_at_n2",
            heron_fixed_leg(1.0, 1.0, 2.0).unwrap_or(f64::NAN),
        )
        .confirm(|hp, w| {
            let n = w.n.unwrap_or(f64::NAN);
            let heron = hp.fixed_leg_area(1.0, 1.0, n);
            rel(printed_isosceles_area(n), heron)
        })
}

fn printed_isosceles_limit() -> Finding {
    let claimed = 6f64.sqrt();
    let heron = heron_fixed_leg(1.0, 1.0, INF_N).unwrap_or(f64::NAN);
    let by_angle = theta(1.0, INF_N)
        .and_then(|t| area_from_angle(1.0, ratio(1.0), t).ok())
        .map_or(f64::NAN, |v| v.area);
    let worst = rel(claimed, heron).max(rel(claimed, by_angle));
    Finding::new(worst, 1e-4, Witness::at(1.0, INF_N).with_a(1.0))
        .eval("claimed", claimed)
        .eval("heron", heron)
        .eval("from_angle", by_angle)
        .eval("equilateral", equilateral(1.0))
        .confirm(|hp, _| rel(claimed, hp.fixed_leg_area(1.0, 1.0, INF_N)))
}

fn fixed_perimeter_max_isosceles() -> Finding {
    let mut worst = Worst::new();
    for n in [1.5, 2.0, 3.0, 10.0, 50.0, -1.0, -3.0, -10.0] {
        let gammas = if n > 0.0 {
            positive_gammas()
        } else {
            negative_gammas()
        };
        let formula = or_nan(area_max_fixed_perimeter_isosceles(1.0, degree(n)).map(|v| v.area));
        let vals: Vec<Option<f64>> = gammas
            .iter()
            .map(|&g| {
                area_fixed_perimeter(1.0, ratio(g), degree(n))
                    .ok()
                    .map(|v| v.area)
            })
            .collect();
        let beyond = grid_argmax(&gammas, &vals)
            .map_or(f64::NAN, |e| ((e.value - formula) / formula).max(0.0));
        let heron = heron_fixed_perimeter(1.0, 1.0, n).unwrap_or(f64::NAN);
        worst.push(
            beyond + rel(formula, heron),
            Witness::at(1.0, n).with_perimeter(1.0),
        );
    }
    Finding::from_worst(worst, 1e-10)
}

fn equilateral_limit() -> Finding {
    let formula = or_nan(area_max_fixed_perimeter_isosceles(1.0, degree(INF_N)).map(|v| v.area));
    let target = equilateral(1.0 / 3.0);
    Finding::new(
        (formula - target).abs(),
        1e-4,
        Witness::at(1.0, INF_N).with_perimeter(1.0),
    )
    .eval("surrogate_area", formula)
    .eval("equilateral", target)
}

fn positive_infinite_perimeter_area() -> Finding {
    let mut worst = Worst::new();
    for g in [1.0, 1.2, 1.5, 2.0, 5.0, 10.0, 100.0] {
        let formula = or_nan(area_limit_pos_inf_fixed_perimeter(1.0, ratio(g)).map(|v| v.area));
        let heron = heron_fixed_perimeter(1.0, g, INF_N).unwrap_or(f64::NAN);
        worst.push(
            rel(formula, heron),
            Witness::at(g, INF_N).with_perimeter(1.0),
        );
    }
    let far = or_nan(area_limit_pos_inf_fixed_perimeter(1.0, ratio(1e6)).map(|v| v.area));
    Finding::from_worst(worst, 1e-4).eval("area_at_gamma_1e6", far)
}

fn isosceles_extremal_area() -> Finding {
    let mut worst = Worst::new();
    for n in [1.0, 1.5, 2.0, 3.0, 10.0, 100.0, -1.0, -2.0, -10.0, -100.0] {
        let formula = or_nan(area_isosceles_extremal(1.0, degree(n)).map(|v| v.area));
        let heron = heron_fixed_leg(1.0, 1.0, n).unwrap_or(f64::NAN);
        worst.push((formula - heron).abs(), Witness::at(1.0, n).with_a(1.0));
    }
    Finding::from_worst(worst, 1e-12)
}

fn negative_infinite_leg_area() -> Finding {
    let mut worst = Worst::new();
    for g in linspace(1.0, 1.99, 100) {
        let formula = or_nan(area_limit_neg_inf_fixed_leg(1.0, ratio(g)).map(|v| v.area));
        let heron = heron_fixed_leg(1.0, g, -INF_N).unwrap_or(f64::NAN);
        worst.push(
            (formula - heron).abs() / (0.5 * g),
            Witness::at(g, -INF_N).with_a(1.0),
        );
    }
    Finding::from_worst(worst, 1e-4)
}

fn negative_infinite_leg_peak() -> Finding {
    let gammas = linspace(1.0, 2.0, GRID);
    let vals: Vec<Option<f64>> = gammas
        .iter()
        .map(|&g| {
            area_limit_neg_inf_fixed_leg(1.0, ratio(g))
                .ok()
                .map(|v| v.area)
        })
        .collect();
    match grid_argmax(&gammas, &vals) {
        Some(e) => Finding::new(
            (e.x - SQRT_2).abs().max((e.value - 0.5).abs()),
            1e-6,
            Witness::at(e.x, f64::NEG_INFINITY).with_a(1.0),
        )
        .eval("argmax_gamma", e.x)
        .eval("max_area", e.value),
        None => Finding::new(f64::NAN, 1e-6, Witness::default()),
    }
}

fn negative_infinite_equal_pair() -> Finding {
    let e = |g: f64| or_nan(area_limit_neg_inf_fixed_leg(1.0, ratio(g)).map(|v| v.area));
    let root3 = 3f64.sqrt();
    // limiting sides (1, γ, 1)
    let heron_root3 = heron_area(&TriangleSides {
        a: 1.0,
        b: root3,
        c: 1.0,
    })
    .unwrap_or(f64::NAN);
    let worst = (e(1.0) - e(root3))
        .abs()
        .max((e(1.0) - equilateral(1.0)).abs())
        .max((e(root3) - heron_root3).abs());
    Finding::new(
        worst,
        1e-12,
        Witness::at(root3, f64::NEG_INFINITY).with_a(1.0),
    )
    .eval("area_gamma_1", e(1.0))
    .eval("area_gamma_sqrt3", e(root3))
}

fn negative_infinite_perimeter_area() -> Finding {
    let mut worst = Worst::new();
    for g in linspace(1.0, 1.99, 50) {
        let formula = or_nan(area_limit_neg_inf_fixed_perimeter(1.0, ratio(g)).map(|v| v.area));
        let heron = heron_fixed_perimeter(1.0, g, -INF_N).unwrap_or(f64::NAN);
        worst.push(
            rel(formula, heron),
            Witness::at(g, -INF_N).with_perimeter(1.0),
        );
    }
    let gammas = negative_gammas();
    let vals: Vec<Option<f64>> = gammas
        .iter()
        .map(|&g| {
            area_limit_neg_inf_fixed_perimeter(1.0, ratio(g))
                .ok()
                .map(|v| v.area)
        })
        .collect();
    let peak = grid_argmax(&gammas, &vals);
    let off_isosceles = peak.map_or(f64::NAN, |e| if e.index == 0 { 0.0 } else { 1.0 });
    let peak_error = peak.map_or(f64::NAN, |e| (e.value - equilateral(1.0 / 3.0)).abs());
    worst.push(
        off_isosceles + peak_error,
        Witness::at(1.0, -INF_N).with_perimeter(1.0),
    );
    Finding::from_worst(worst, 1e-4)
}

fn largest_angle_largest_area() -> Finding {
    let mut v = Violations::default();
    for g in [1.2, 1.5, 1.8] {
        let Some(nc) = ncrit(g) else {
            v.check(false, Witness::at(g, f64::NAN));
            continue;
        };
        let ns = linspace(-50.0, nc, GRID);
        let areas: Vec<Option<f64>> = ns
            .iter()
            .map(|&n| {
                area_fixed_leg(1.0, ratio(g), degree(n))
                    .ok()
                    .map(|v| v.area)
            })
            .collect();
        let angles: Vec<Option<f64>> = ns.iter().map(|&n| theta(g, n)).collect();
        let (ia, it) = (grid_argmax(&ns, &areas), grid_argmax(&ns, &angles));
        let same = matches!((ia, it), (Some(a), Some(t)) if a.index == t.index);
        v.check(
            same,
            Witness::at(g, ia.map_or(f64::NAN, |e| e.x)).with_a(1.0),
        );
        // every angle is acute, so area rises with angle along the grid
        for i in 1..ns.len() {
            if let (Some(a0), Some(a1), Some(t0), Some(t1)) =
                (areas[i - 1], areas[i], angles[i - 1], angles[i])
            {
                v.check(
                    t1 < FRAC_PI_2 && (a1 - a0) * (t1 - t0) >= 0.0,
                    Witness::at(g, ns[i]),
                );
            }
        }
    }
    v.finding()
}

fn fixed_perimeter_peak_at_sqrt2() -> Finding {
    let gammas = negative_gammas();
    let vals: Vec<Option<f64>> = gammas
        .iter()
        .map(|&g| heron_fixed_perimeter(1.0, g, -INF_N))
        .collect();
    let at_root2 = heron_fixed_perimeter(1.0, SQRT_2, -INF_N).unwrap_or(f64::NAN);
    let Some(peak) = grid_argmax(&gammas, &vals) else {
        return Finding::new(f64::NAN, 1e-6, Witness::default());
    };
    Finding::new(
        (peak.value - at_root2) / peak.value,
        1e-6,
        Witness::at(SQRT_2, -INF_N).with_perimeter(1.0),
    )
    .eval("argmax_gamma", peak.x)
    .eval("area_at_argmax", peak.value)
    .eval("area_at_sqrt2", at_root2)
    .confirm(|hp, _| {
        let best = hp.fixed_perimeter_area(1.0, 1.0, -INF_N);
        (best - hp.fixed_perimeter_area(1.0, SQRT_2, -INF_N)) / best
    })
}

const CLAIMS: &[Claim] = &[
    Claim {
        id: "C-EQ2",
        oracle: "law_of_cosines_residual",
        grid: "2000 in-domain samples, seed 0x5eed0002",
        run: law_of_cosines,
    },
    Claim {
        id: "C-N1N2",
        oracle: "side relations c = a + b (n = 1) and c² = a² + b² (n = 2)",
        grid: "gamma 1:100:2001",
        run: degrees_one_and_two,
    },
    Claim {
        id: "C-OBTUSE",
        oracle: "sign of a² + b² − c² from side lengths",
        grid: "gamma 1:20:96 x n 1.01:1.99:50 + 2.01:50:100",
        run: obtuse_and_acute,
    },
    Claim {
        id: "C-EQ5",
        oracle: "finite_difference of vertex_angle in gamma",
        grid: "n in {1.2,1.5,1.8,3,5,10} x gamma 1:20:2001; n in {-1,-2,-5} x gamma 1:1.99:2001",
        run: angle_stationary_only_at_one,
    },
    Claim {
        id: "C-EQ6",
        oracle: "grid maximum of vertex_angle over gamma",
        grid: "n 1:2:11 x gamma 1:20:2001",
        run: max_angle_isosceles,
    },
    Claim {
        id: "C-EQ7",
        oracle: "grid minimum of vertex_angle over gamma",
        grid: "n in {2,2.5,3,5,7,10,20,50,100} x gamma 1:20:2001",
        run: min_angle_isosceles,
    },
    Claim {
        id: "C-EQ8",
        oracle: "vertex_angle at surrogate degree 1e6",
        grid: "gamma in {0.3,0.5,0.8,1,1.5,2,3,10,100}",
        run: positive_infinite_limit,
    },
    Claim {
        id: "C-EQ10",
        oracle: "320-bit cosine argument at gamma = 1",
        grid: "n = -10^e, e -3:6:500",
        run: isosceles_all_negative,
    },
    Claim {
        id: "C-EQ11",
        oracle: "320-bit residual and cosine argument either side of the root",
        grid: "gamma 1.01:1.99:50",
        run: critical_degree_root,
    },
    Claim {
        id: "C-NCRIT0",
        oracle: "320-bit vertex angle at the solved root",
        grid: "gamma 1.01:1.99:50",
        run: collapse_at_critical_degree,
    },
    Claim {
        id: "C-GAMMA2",
        oracle: "320-bit cosine argument exceeds 1",
        grid: "1000 samples gamma 2:10, n -30:-0.05, seed 0x5eed0ca2; plus gamma = 2 at n in {-0.05,-1,-30}",
        run: ratio_at_least_two,
    },
    Claim {
        id: "C-EQANGLE",
        oracle: "vertex_angle at n = -1 against n = -2",
        grid: "gamma 1:1.99:2001",
        run: equal_negative_angles,
    },
    Claim {
        id: "C-EQ13",
        oracle: "grid maximum of vertex_angle over gamma",
        grid: "n in {-0.5,-1,-1.5,-2,-3,-5,-10,-30} x gamma 1:1.99:2001",
        run: max_angle_isosceles_negative,
    },
    Claim {
        id: "C-EQ14",
        oracle: "vertex_angle at surrogate degree -1e6",
        grid: "gamma in {1,1.1,1.3,1.5,1.8,1.95}",
        run: negative_infinite_limit,
    },
    Claim {
        id: "C-EQ16",
        oracle: "heron_area",
        grid: "10000 in-domain samples, seed 0x5eed0016",
        run: fixed_leg_area,
    },
    Claim {
        id: "C-N2ONLY",
        oracle: "sign scan and bisection with plain powf",
        grid: "gamma in {1.2,2,5} x n 0.5:10:2001",
        run: right_angle_only_at_two,
    },
    Claim {
        id: "C-NMAX2",
        oracle: "grid maximum of area over n with parabolic refinement",
        grid: "gamma in {1,1.5,2.5,5} x n 1:50:2001",
        run: area_peak_at_two,
    },
    Claim {
        id: "C-EQ19",
        oracle: "finite_difference of area in n",
        grid: "gamma in {1,1.5,2.5,5} x n 1.05:50:500",
        run: dn_residual_sign,
    },
    Claim {
        id: "C-EQ20",
        oracle: "finite_difference of area in gamma",
        grid: "gamma 1:50:300 x n 1.01:60:300",
        run: no_gamma_stationary_point,
    },
    Claim {
        id: "C-EQ20-FORM",
        oracle: "finite_difference of area in gamma, rescaled",
        grid: "(gamma, n) in {(1.5,3),(2,1.5),(3,5),(1.2,10)}",
        run: dgamma_constant,
    },
    Claim {
        id: "C-EQ21",
        oracle: "heron_area of the isosceles triangle",
        grid: "n in {1.5,2,3,5,10,100}",
        run: printed_isosceles_formula,
    },
    Claim {
        id: "C-EQ22",
        oracle: "heron_area and area_from_angle at surrogate degree 1e6",
        grid: "gamma = 1, n = 1e6",
        run: printed_isosceles_limit,
    },
    Claim {
        id: "C-EQ25",
        oracle: "grid maximum of the fixed-perimeter area; heron_area at gamma = 1",
        grid: "n in {1.5,2,3,10,50} x gamma 1:20:2001; n in {-1,-3,-10} x gamma 1:1.99:2001",
        run: fixed_perimeter_max_isosceles,
    },
    Claim {
        id: "C-EQ26",
        oracle: "heron_area of the equilateral triangle",
        grid: "n = 1e6",
        run: equilateral_limit,
    },
    Claim {
        id: "C-EQ27",
        oracle: "heron_area at surrogate degree 1e6, scaled to the perimeter",
        grid: "gamma in {1,1.2,1.5,2,5,10,100}",
        run: positive_infinite_perimeter_area,
    },
    Claim {
        id: "C-EQ29",
        oracle: "heron_area of the isosceles triangle",
        grid: "n in {1,1.5,2,3,10,100,-1,-2,-10,-100}",
        run: isosceles_extremal_area,
    },
    Claim {
        id: "C-EQ30",
        oracle: "heron_area at surrogate degree -1e6",
        grid: "gamma 1:1.99:100",
        run: negative_infinite_leg_area,
    },
    Claim {
        id: "C-SQRT2",
        oracle: "grid maximum with parabolic refinement",
        grid: "gamma 1:2:2001",
        run: negative_infinite_leg_peak,
    },
    Claim {
        id: "C-EQ30EQ",
        oracle: "heron_area of the limiting sides (1, γ, 1)",
        grid: "gamma in {1, sqrt 3}",
        run: negative_infinite_equal_pair,
    },
    Claim {
        id: "C-EQ31",
        oracle: "heron_area at surrogate degree -1e6, scaled to the perimeter; grid maximum",
        grid: "gamma 1:1.99:50 and 1:1.99:2001",
        run: negative_infinite_perimeter_area,
    },
    Claim {
        id: "C-NEGMAXTHETA",
        oracle: "grid maxima of area and vertex_angle over n",
        grid: "gamma in {1.2,1.5,1.8} x n -50:n_crit:2001",
        run: largest_angle_largest_area,
    },
    Claim {
        id: "C-PSQRT2",
        oracle: "heron_area at surrogate degree -1e6, scaled to the perimeter",
        grid: "gamma 1:1.99:2001",
        run: fixed_perimeter_peak_at_sqrt2,
    },
];

/// Ids of every registered claim, in registration order.
pub fn claim_ids() -> Vec<&'static str> {
    CLAIMS.iter().map(|c| c.id).collect()
}

/// Where each claim is stated in the source text, keyed by id.
fn citation(id: &str) -> String {
    static CITATIONS: OnceLock<BTreeMap<String, String>> = OnceLock::new();
    CITATIONS
        .get_or_init(|| {
            serde_json::from_str(include_str!("../../data/claim_citations.json"))
                .expect("bundled citations parse")
        })
        .get(id)
        .cloned()
        .unwrap_or_default()
}

fn evaluate(claim: &Claim) -> ClaimRecord {
    let f = (claim.run)();
    ClaimRecord {
        id: claim.id.to_string(),
        paper_ref: citation(claim.id),
        oracle: claim.oracle.to_string(),
        status: adjudicate(f.worst, f.tol, f.hp),
        worst_residual: f.worst,
        tolerance: f.tol,
        witness: f.witness,
        high_precision_residual: f.hp,
        evaluations: f.evaluations,
    }
}

/// Runs every claim (in parallel) and assembles the report in registration
/// order.
pub fn run_claims_report() -> ClaimsReport {
    let claims = CLAIMS.par_iter().map(evaluate).collect();
    let grid_spec = CLAIMS
        .iter()
        .map(|c| (c.id.to_string(), c.grid.to_string()))
        .collect();
    ClaimsReport {
        version: REPORT_VERSION.to_string(),
        grid_spec,
        claims,
    }
}

/// Runs a single claim by id.
pub fn run_claim(id: &str) -> Option<ClaimRecord> {
    CLAIMS.iter().find(|c| c.id == id).map(evaluate)
}
