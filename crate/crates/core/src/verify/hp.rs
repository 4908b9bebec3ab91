//! 320-bit re-evaluation used to confirm refutations. The formulas here are
//! written from the triangle relations directly and share no code with the
//! double-precision library.

use std::cmp::Ordering;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};

/// Working precision in bits (about 96 decimal digits).
pub const PRECISION_BITS: usize = 320;

const RM: RoundingMode = RoundingMode::ToEven;

pub struct HighPrecision {
    p: usize,
    cc: Consts,
}

impl Default for HighPrecision {
    fn default() -> Self {
        Self::new()
    }
}

impl HighPrecision {
    pub fn new() -> Self {
        HighPrecision {
            p: PRECISION_BITS,
            cc: Consts::new().expect("astro-float constant cache"),
        }
    }

    /// Exact conversion of a double.
    pub fn num(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, self.p)
    }

    /// Correctly rounded back to a double.
    pub fn to_f64(&mut self, x: &BigFloat) -> f64 {
        if x.is_nan() {
            return f64::NAN;
        }
        x.format(Radix::Dec, RM, &mut self.cc)
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(f64::NAN)
    }

    fn add(&self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        x.add(y, self.p, RM)
    }
    fn sub(&self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        x.sub(y, self.p, RM)
    }
    fn mul(&self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        x.mul(y, self.p, RM)
    }
    fn div(&self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        x.div(y, self.p, RM)
    }
    fn pow(&mut self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        x.pow(y, self.p, RM, &mut self.cc)
    }
    fn sqrt(&self, x: &BigFloat) -> BigFloat {
        x.sqrt(self.p, RM)
    }

    /// `c/a = (γ^n + 1)^(1/n)`.
    fn third_side(&mut self, g: &BigFloat, n: &BigFloat) -> BigFloat {
        let one = self.num(1.0);
        let gn = self.pow(g, n);
        let s = self.add(&gn, &one);
        let inv = self.div(&one, n);
        self.pow(&s, &inv)
    }

    /// `(a² + b² − c²) / 2ab` with `a = 1`.
    fn cos_arg_big(&mut self, g: &BigFloat, n: &BigFloat) -> BigFloat {
        let c = self.third_side(g, n);
        let one = self.num(1.0);
        let g2 = self.mul(g, g);
        let c2 = self.mul(&c, &c);
        let num = self.sub(&self.add(&g2, &one), &c2);
        let den = self.mul(&self.num(2.0), g);
        self.div(&num, &den)
    }

    /// Cosine argument of the vertex angle.
    pub fn cos_arg(&mut self, gamma: f64, n: f64) -> BigFloat {
        let (g, n) = (self.num(gamma), self.num(n));
        self.cos_arg_big(&g, &n)
    }

    /// `cos_arg − 1 = ((γ − 1)² − (c/a)²) / 2γ`, which keeps differences far
    /// below the working precision relative to 1.
    fn excess_big(&mut self, gamma: f64, n: f64) -> BigFloat {
        let (g, n) = (self.num(gamma), self.num(n));
        let c = self.third_side(&g, &n);
        let gm1 = self.sub(&g, &self.num(1.0));
        let num = self.sub(&self.mul(&gm1, &gm1), &self.mul(&c, &c));
        self.div(&num, &self.mul(&self.num(2.0), &g))
    }

    /// `cos_arg − 1` rounded to a double.
    pub fn cos_arg_minus_one(&mut self, gamma: f64, n: f64) -> f64 {
        let d = self.excess_big(gamma, n);
        self.to_f64(&d)
    }

    /// Sign of `cos_arg − 1`; the difference can be far below the smallest
    /// double.
    pub fn cos_arg_cmp_one(&mut self, gamma: f64, n: f64) -> Ordering {
        let d = self.excess_big(gamma, n);
        if d.is_zero() {
            Ordering::Equal
        } else if d.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Vertex angle in radians, `None` when the argument leaves [−1, 1].
    pub fn vertex_angle(&mut self, gamma: f64, n: f64) -> Option<f64> {
        let arg = self.cos_arg(gamma, n);
        let a = self.to_f64(&self.sub(&arg, &self.num(1.0)));
        let b = self.to_f64(&self.add(&arg, &self.num(1.0)));
        if a > 0.0 || b < 0.0 || a.is_nan() {
            return None;
        }
        let theta = arg.acos(self.p, RM, &mut self.cc);
        Some(self.to_f64(&theta))
    }

    /// Plain Heron at working precision.
    fn heron(&mut self, a: &BigFloat, b: &BigFloat, c: &BigFloat) -> BigFloat {
        let s = self.div(&self.add(&self.add(a, b), c), &self.num(2.0));
        let prod = self.mul(
            &self.mul(&s, &self.sub(&s, a)),
            &self.mul(&self.sub(&s, b), &self.sub(&s, c)),
        );
        if prod.is_negative() {
            return self.num(0.0);
        }
        self.sqrt(&prod)
    }

    fn fixed_leg_big(&mut self, a: &BigFloat, g: &BigFloat, n: &BigFloat) -> BigFloat {
        let b = self.mul(a, g);
        let ratio = self.third_side(g, n);
        let c = self.mul(a, &ratio);
        self.heron(a, &b, &c)
    }

    /// Area with leg `a`, second leg `γa` and third side from the power sum.
    pub fn fixed_leg_area(&mut self, a: f64, gamma: f64, n: f64) -> f64 {
        let (a, g, n) = (self.num(a), self.num(gamma), self.num(n));
        let area = self.fixed_leg_big(&a, &g, &n);
        self.to_f64(&area)
    }

    /// Area of the same shape scaled to perimeter `p`.
    pub fn fixed_perimeter_area(&mut self, p: f64, gamma: f64, n: f64) -> f64 {
        let (g, n) = (self.num(gamma), self.num(n));
        let one = self.num(1.0);
        let c = self.third_side(&g, &n);
        let per = self.add(&self.add(&one, &g), &c);
        let a = self.div(&self.num(p), &per);
        let area = self.fixed_leg_big(&a, &g, &n);
        self.to_f64(&area)
    }

    /// `(γ^n + 1)^(1/n) − (γ − 1)`.
    pub fn ncrit_residual(&mut self, gamma: f64, n: f64) -> f64 {
        let (g, n) = (self.num(gamma), self.num(n));
        let c = self.third_side(&g, &n);
        let r = self.sub(&c, &self.sub(&g, &self.num(1.0)));
        self.to_f64(&r)
    }

    /// `∂A/∂γ·√(4γ² − N²)/(2γ)` for the fixed-leg area at `a = 2`, with
    /// `N = γ² + 1 − (γ^n + 1)^(2/n)` and the derivative taken as a central
    /// difference of step `1e-40` at working precision. Compare with
    /// [`HighPrecision::nq`]: the two sum to a constant.
    pub fn dgamma_scaled(&mut self, gamma: f64, n: f64) -> f64 {
        let (g, n) = (self.num(gamma), self.num(n));
        let a = self.num(2.0);
        let h = self.num(1e-40);
        let up = self.add(&g, &h);
        let dn = self.sub(&g, &h);
        let a_up = self.fixed_leg_big(&a, &up, &n);
        let a_dn = self.fixed_leg_big(&a, &dn, &n);
        let deriv = self.div(&self.sub(&a_up, &a_dn), &self.mul(&self.num(2.0), &h));
        // N = γ² + 1 − (γ^n + 1)^(2/n)
        let c = self.third_side(&g, &n);
        let big_n = self.sub(
            &self.add(&self.mul(&g, &g), &self.num(1.0)),
            &self.mul(&c, &c),
        );
        let two_g = self.mul(&self.num(2.0), &g);
        let rad = self.sub(&self.mul(&two_g, &two_g), &self.mul(&big_n, &big_n));
        let scaled = self.div(&self.mul(&deriv, &self.sqrt(&rad)), &two_g);
        self.to_f64(&scaled)
    }

    /// `N·Q` with `Q = 1 − γ^(n−2)(γ^n + 1)^(2/n − 1)`.
    pub fn nq(&mut self, gamma: f64, n: f64) -> f64 {
        let (g, n) = (self.num(gamma), self.num(n));
        let one = self.num(1.0);
        let two = self.num(2.0);
        let c = self.third_side(&g, &n);
        let big_n = self.sub(&self.add(&self.mul(&g, &g), &one), &self.mul(&c, &c));
        let gn = self.pow(&g, &n);
        let s = self.add(&gn, &one);
        let e = self.sub(&self.div(&two, &n), &one);
        let nm2 = self.sub(&n, &two);
        let g_part = self.pow(&g, &nm2);
        let s_part = self.pow(&s, &e);
        let t = self.mul(&g_part, &s_part);
        let q = self.sub(&one, &t);
        let nq = self.mul(&big_n, &q);
        self.to_f64(&nq)
    }
}
