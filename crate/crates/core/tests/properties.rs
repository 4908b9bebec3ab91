use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

use ndegree::verify::oracles::{grid_argmax, heron_area, linspace};
use ndegree::{
    angle_stationarity_residual, area_fixed_leg, area_fixed_perimeter, area_from_angle,
    area_isosceles_extremal, area_limit_neg_inf_fixed_leg, area_limit_neg_inf_fixed_perimeter,
    area_limit_pos_inf_fixed_perimeter, area_max_fixed_perimeter_isosceles, classify_triangle,
    cos_vertex_arg, extremal_isosceles_angle, fmt_g17, is_real_domain, limit_angle_neg_inf,
    limit_angle_pos_inf, side_lengths, solve_ncrit, vertex_angle, AngleOutcome, Degree, SideRatio,
    TriangleClass,
};
use proptest::prelude::*;

fn g(v: f64) -> SideRatio {
    SideRatio::new(v).unwrap()
}

fn d(v: f64) -> Degree {
    Degree::new(v).unwrap()
}

fn theta(gamma: f64, n: f64) -> Option<f64> {
    vertex_angle(g(gamma), d(n)).theta()
}

fn rel(x: f64, y: f64) -> f64 {
    (x - y).abs() / y.abs().max(f64::MIN_POSITIVE)
}

/// An in-domain `(γ, n)` on either side of the degree axis.
fn in_domain() -> impl Strategy<Value = (f64, f64)> {
    prop_oneof![
        (1.0..10.0f64, 1.0..50.0f64),
        (1.0..1.99f64, -50.0..-0.01f64)
            .prop_filter("below n_crit", |&(gv, nv)| { is_real_domain(g(gv), d(nv)) }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn positive_degrees_give_real_angles_in_range(gv in 1.0..1e3f64, nv in 1.0..1e4f64) {
        let t = theta(gv, nv).expect("real for n >= 1");
        prop_assert!((0.0..=PI).contains(&t));
    }

    #[test]
    fn degrees_one_and_two_ignore_the_ratio(gv in 1.0..1e4f64) {
        prop_assert!((theta(gv, 1.0).unwrap() - PI).abs() <= 1e-9);
        prop_assert!((theta(gv, 2.0).unwrap() - FRAC_PI_2).abs() <= 1e-9);
    }

    #[test]
    fn classification_flips_at_degree_two(gv in 1.0..100.0f64, below in 1.0..1.98f64, above in 2.02..60.0f64) {
        prop_assert!(theta(gv, below).unwrap() > FRAC_PI_2);
        prop_assert!(theta(gv, above).unwrap() < FRAC_PI_2);
        prop_assert_eq!(classify_triangle(g(gv), d(above)), Ok(TriangleClass::Acute));
    }

    #[test]
    fn cosine_of_angle_matches_argument((gv, nv) in in_domain()) {
        match vertex_angle(g(gv), d(nv)) {
            AngleOutcome::Real { theta, cos_arg } => prop_assert!((theta.cos() - cos_arg).abs() <= 1e-12),
            other => prop_assert!(false, "excluded in domain: {:?}", other),
        }
    }

    #[test]
    fn fractional_degrees_are_excluded(gv in 1.0..1e3f64, nv in 1e-6..0.999f64) {
        prop_assert!(!vertex_angle(g(gv), d(nv)).is_real());
        prop_assert!(!is_real_domain(g(gv), d(nv)));
    }

    #[test]
    fn wide_ratios_have_no_negative_degree_triangles(gv in 2.0..1e3f64, nv in -1e3..-1e-3f64) {
        prop_assert!(!vertex_angle(g(gv), d(nv)).is_real());
    }

    #[test]
    fn domain_predicate_agrees_with_cosine_argument(gv in 1.0001..1.9999f64, nv in -20.0..-0.05f64) {
        let arg = cos_vertex_arg(g(gv), d(nv));
        // the solver and the argument may disagree only on the root itself
        prop_assume!((arg - 1.0).abs() > 1e-9);
        prop_assert_eq!(is_real_domain(g(gv), d(nv)), arg < 1.0);
    }

    #[test]
    fn heron_agrees_with_fixed_leg_area(a in 1e-3..1e3f64, (gv, nv) in in_domain()) {
        let sides = side_lengths(a, g(gv), d(nv)).unwrap();
        let want = area_fixed_leg(a, g(gv), d(nv)).unwrap().area;
        prop_assert!(rel(heron_area(&sides).unwrap(), want) <= 1e-9);
    }

    #[test]
    fn angle_form_agrees_with_fixed_leg_area(a in 1e-3..1e3f64, (gv, nv) in in_domain()) {
        let t = theta(gv, nv).unwrap();
        let via_angle = area_from_angle(a, g(gv), t).unwrap().area;
        let direct = area_fixed_leg(a, g(gv), d(nv)).unwrap().area;
        prop_assert!(rel(via_angle, direct) <= 1e-10);
    }

    #[test]
    fn areas_scale_quadratically(k in 1e-2..1e2f64, (gv, nv) in in_domain()) {
        let leg = area_fixed_leg(1.0, g(gv), d(nv)).unwrap().area;
        let leg_k = area_fixed_leg(k, g(gv), d(nv)).unwrap().area;
        prop_assert!(rel(leg_k, k * k * leg) <= 1e-12 || leg == 0.0);
        let per = area_fixed_perimeter(1.0, g(gv), d(nv)).unwrap().area;
        let per_k = area_fixed_perimeter(k, g(gv), d(nv)).unwrap().area;
        prop_assert!(rel(per_k, k * k * per) <= 1e-12 || per == 0.0);
    }

    #[test]
    fn right_triangle_area_grows_with_ratio(lo in 1.0..1e3f64, step in 1e-6..1.0f64) {
        let at = |x: f64| area_fixed_leg(1.0, g(x), d(2.0)).unwrap().area;
        prop_assert!(rel(at(lo), 0.5 * lo) <= 1e-12);
        prop_assert!(at(lo + step) > at(lo));
    }

    #[test]
    fn printed_doubles_round_trip(x in any::<f64>().prop_filter("finite", |x| x.is_finite())) {
        prop_assert_eq!(fmt_g17(x).parse::<f64>().unwrap().to_bits(), x.to_bits());
    }
}

#[test]
fn isosceles_triangle_is_the_extreme_over_ratio() {
    for &(nv, g_hi) in &[
        (1.2, 4.0),
        (1.5, 4.0),
        (3.0, 4.0),
        (7.0, 4.0),
        (-1.0, 1.99),
        (-3.0, 1.99),
    ] {
        let gammas = linspace(1.0, g_hi, 2001);
        let values: Vec<_> = gammas.iter().map(|&x| theta(x, nv)).collect();
        let want = extremal_isosceles_angle(d(nv)).unwrap();
        // maximum for 1 < n < 2 and n < 0, minimum for n > 2
        let signed: Vec<_> = if nv > 2.0 {
            values.iter().map(|v| v.map(|t| -t)).collect()
        } else {
            values
        };
        let best = grid_argmax(&gammas, &signed).unwrap();
        assert_eq!(best.index, 0, "n = {nv}");
        assert!((best.value.abs() - want).abs() <= 1e-6, "n = {nv}");
    }
}

#[test]
fn huge_degrees_approach_closed_form_limits() {
    for &gv in &[1.0, 1.5, 3.0] {
        let t = theta(gv, 1e6).unwrap();
        assert!((t - limit_angle_pos_inf(g(gv))).abs() <= 1e-4, "γ = {gv}");
    }
    for &gv in &[1.0, 1.3, 1.8] {
        let t = theta(gv, -1e6).unwrap();
        assert!(
            (t - limit_angle_neg_inf(g(gv)).unwrap()).abs() <= 1e-4,
            "γ = {gv}"
        );
    }
}

#[test]
fn stationary_point_at_isosceles_has_flat_angle() {
    for &nv in &[1.2, 1.5, 3.0, 7.0, -1.0, -3.0] {
        assert!(angle_stationarity_residual(g(1.0), d(nv)).abs() <= 1e-12);
        let h = 1e-6;
        let left = vertex_angle(SideRatio::excluded_regime(1.0 - h).unwrap(), d(nv))
            .theta()
            .unwrap();
        let right = theta(1.0 + h, nv).unwrap();
        assert!(((right - left) / (2.0 * h)).abs() <= 1e-6, "n = {nv}");
    }
}

#[test]
fn degree_five_thousand_does_not_overflow() {
    let t = theta(3.0, 5000.0).unwrap();
    assert!(t.is_finite());
    assert!((t - limit_angle_pos_inf(g(3.0))).abs() <= 1e-6);
}

#[test]
fn critical_degree_is_a_root_and_a_boundary() {
    let gammas = linspace(1.01, 1.99, 50);
    let mut previous = f64::INFINITY;
    for &gv in &gammas {
        let c = solve_ncrit(g(gv), 1e-12).unwrap();
        assert!(
            (cos_vertex_arg(g(gv), d(c.n_crit)) - 1.0).abs() <= 1e-11,
            "γ = {gv}"
        );
        assert!(c.n_crit < previous, "n_crit not decreasing at γ = {gv}");
        previous = c.n_crit;

        let at_root = theta(gv, c.n_crit).unwrap();
        assert!(at_root <= 1e-4, "γ = {gv}: θ = {at_root}");
        assert!(theta(gv, c.n_crit * 1.001).is_some());
        assert!(theta(gv, c.n_crit * 0.999).is_none());
    }
}

#[test]
fn fixed_leg_area_peaks_at_degree_two() {
    let degrees = linspace(1.0, 50.0, 2001);
    for &gv in &[1.0, 1.5, 2.5] {
        let areas: Vec<_> = degrees
            .iter()
            .map(|&nv| area_fixed_leg(1.0, g(gv), d(nv)).ok().map(|a| a.area))
            .collect();
        let best = grid_argmax(&degrees, &areas).unwrap();
        assert!(
            (best.x - 2.0).abs() <= degrees[1] - degrees[0],
            "γ = {gv}: {}",
            best.x
        );
    }
}

#[test]
fn negative_degree_area_follows_the_widest_angle() {
    for &gv in &[1.2, 1.5] {
        let nc = solve_ncrit(g(gv), 1e-12).unwrap().n_crit;
        let degrees = linspace(-50.0, nc, 2001);
        let areas: Vec<_> = degrees
            .iter()
            .map(|&nv| area_fixed_leg(1.0, g(gv), d(nv)).ok().map(|a| a.area))
            .collect();
        let angles: Vec<_> = degrees.iter().map(|&nv| theta(gv, nv)).collect();
        assert_eq!(
            grid_argmax(&degrees, &areas).unwrap().index,
            grid_argmax(&degrees, &angles).unwrap().index,
            "γ = {gv}"
        );
    }
}

#[test]
fn negative_infinite_degree_area_peaks_at_root_two() {
    let gammas = linspace(1.0, 1.999, 2001);
    let areas: Vec<_> = gammas
        .iter()
        .map(|&x| area_limit_neg_inf_fixed_leg(1.0, g(x)).ok().map(|a| a.area))
        .collect();
    let best = grid_argmax(&gammas, &areas).unwrap();
    assert!((best.x - SQRT_2).abs() <= gammas[1] - gammas[0]);
    assert!((best.value - 0.5).abs() <= 1e-6, "{best:?}");
    let peak = area_limit_neg_inf_fixed_leg(1.0, g(SQRT_2)).unwrap().area;
    assert!((peak - 0.5).abs() <= 1e-15);
    let at_one = area_limit_neg_inf_fixed_leg(1.0, g(1.0)).unwrap().area;
    let at_root_three = area_limit_neg_inf_fixed_leg(1.0, g(3f64.sqrt()))
        .unwrap()
        .area;
    assert!((at_one - at_root_three).abs() <= 1e-12);
    assert!((at_one - 3f64.sqrt() / 4.0).abs() <= 1e-12);
}

#[test]
fn isosceles_closed_forms_coincide_with_general_ones() {
    for &nv in &[1.0, 1.5, 2.0, 3.0, 10.0, -1.0, -4.0] {
        let general = area_fixed_perimeter(1.0, g(1.0), d(nv)).unwrap().area;
        let iso = area_max_fixed_perimeter_isosceles(1.0, d(nv)).unwrap().area;
        assert!((general - iso).abs() <= 1e-14, "n = {nv}");
        let leg = area_fixed_leg(1.0, g(1.0), d(nv)).unwrap().area;
        let leg_iso = area_isosceles_extremal(1.0, d(nv)).unwrap().area;
        assert!((leg - leg_iso).abs() <= 1e-14, "n = {nv}");
    }
    let equilateral = 3f64.sqrt() / 36.0;
    let pos = area_limit_pos_inf_fixed_perimeter(1.0, g(1.0))
        .unwrap()
        .area;
    let neg = area_limit_neg_inf_fixed_perimeter(1.0, g(1.0))
        .unwrap()
        .area;
    assert!((pos - equilateral).abs() <= 1e-15);
    assert!((neg - equilateral).abs() <= 1e-15);
    let far = area_max_fixed_perimeter_isosceles(1.0, d(1e6))
        .unwrap()
        .area;
    assert!(rel(far, equilateral) <= 1e-4);
    for x in linspace(1.0, 1.99, 100).into_iter().skip(1) {
        assert!(area_limit_neg_inf_fixed_perimeter(1.0, g(x)).unwrap().area < neg);
    }
}
