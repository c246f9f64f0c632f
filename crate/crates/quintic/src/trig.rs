//! All five roots through the angular equation.
//!
//! Writing a root as `y = r e^(i sigma)`, the real and imaginary parts of
//! `(y^5 + u y^4)/2 = xi` force
//!
//! ```text
//! f(sigma) = sin^4(theta + 4 sigma) sin(sigma - theta) / sin^5(5 sigma) = 2 xi
//! r        = -sin(theta + 4 sigma) / sin(5 sigma)
//! ```
//!
//! and each of five disjoint angular intervals carries exactly one solution
//! with `r > 0`. `f` runs from 0 at one end of each interval to +infinity at
//! the other (a pole of `sin(5 sigma)`), so a sign-change bracket always
//! exists and plain bisection pins the argument; the modulus follows from
//! `r`, and a short Newton polish removes the amplification the `r` formula
//! suffers near poles.
//!
//! For `theta = 0` or `theta = pi/5` one interval degenerates to a point;
//! four roots come from bisection and the fifth from the degree-4
//! coefficient (the root sum is `-u`).
//!
//! The root arguments crowd against the poles as `xi` grows, and beyond
//! roughly `xi = 1e76` they are no longer resolvable from the pole angle
//! in f64; bracketing then fails with [`Error::BracketFailure`]. The
//! radical iteration has no such ceiling.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::reductions::{
    form1_to_form2, form2_to_form3, form3_root_to_form1_root, Form1Problem, Form2Problem,
    Form3Problem,
};

/// Bisect the argument to this width before polishing.
pub const ANGLE_TOL: f64 = 1e-13;
/// `theta` within this of 0 or pi/5 takes the four-interval path.
const EDGE_TOL: f64 = 1e-14;
/// Below `|sin(5 sigma)|` of this, evaluate `f` through logarithms.
const LOG_EVAL_LIMIT: f64 = 1e-30;
/// Maximum of `y^4 (y + 1)` over `(-1, 0)`: `(4/5)^4 (1/5)`. For
/// `theta = 0` and `2 xi` below this the two roots that the k = +-2
/// intervals would carry are real in `(-1, 0)` instead, with arguments
/// exactly on the interval endpoints where the angular equation
/// degenerates to 0/0; they are found by bisection on the real line.
const REAL_PAIR_LIMIT: f64 = 256.0 / 3125.0;

/// Which endpoint of an interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalEnd {
    Lower,
    Upper,
}

/// One of the five angular intervals, annotated with which end carries
/// `f = 0` and which is the pole.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularInterval {
    pub k: i32,
    pub lo: f64,
    pub hi: f64,
    pub zero_end: IntervalEnd,
    pub singular_end: IntervalEnd,
}

impl AngularInterval {
    fn zero_point(&self) -> f64 {
        match self.zero_end {
            IntervalEnd::Lower => self.lo,
            IntervalEnd::Upper => self.hi,
        }
    }

    fn singular_point(&self) -> f64 {
        match self.singular_end {
            IntervalEnd::Lower => self.lo,
            IntervalEnd::Upper => self.hi,
        }
    }
}

/// How a root in a [`RootSet`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootProvenance {
    Bisection,
    Vieta,
}

/// One root with its interval provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootRecord {
    pub value: Complex64,
    pub k: i32,
    pub angle: f64,
    pub radius: f64,
    pub residual: f64,
    pub via: RootProvenance,
}

/// The five roots, sorted by interval index k in {-2..2}.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    pub roots: Vec<RootRecord>,
}

impl RootSet {
    pub fn values(&self) -> Vec<Complex64> {
        self.roots.iter().map(|r| r.value).collect()
    }

    pub fn sum(&self) -> Complex64 {
        self.roots
            .iter()
            .fold(Complex64::new(0.0, 0.0), |s, r| s + r.value)
    }

    pub fn product(&self) -> Complex64 {
        self.roots
            .iter()
            .fold(Complex64::new(1.0, 0.0), |p, r| p * r.value)
    }
}

/// Left side of the angular equation.
///
/// Exact poles (`sin(5 sigma) = 0`) are an error; near-pole evaluations go
/// through logarithms and saturate to a signed infinity, which is exactly
/// what the bracketing step wants to see there.
pub fn angle_equation(angle: f64, theta: f64) -> Result<f64> {
    let s5 = (5.0 * angle).sin();
    if s5 == 0.0 {
        return Err(Error::PoleEvaluation);
    }
    let s4 = (theta + 4.0 * angle).sin();
    let s1 = (angle - theta).sin();
    if s5.abs() >= LOG_EVAL_LIMIT {
        return Ok(s4.powi(4) * s1 / s5.powi(5));
    }
    if s4 == 0.0 || s1 == 0.0 {
        return Ok(0.0);
    }
    let sign = s1.signum() * s5.signum();
    let ln = 4.0 * s4.abs().ln() + s1.abs().ln() - 5.0 * s5.abs().ln();
    if ln > 700.0 {
        return Ok(sign * f64::INFINITY);
    }
    Ok(sign * ln.exp())
}

/// Root modulus for a given argument: `-sin(theta + 4 sigma)/sin(5 sigma)`.
/// Positive whenever the argument lies in one of the five intervals.
pub fn radius_at(angle: f64, theta: f64) -> Result<f64> {
    let s5 = (5.0 * angle).sin();
    if s5 == 0.0 {
        return Err(Error::PoleEvaluation);
    }
    Ok(-(theta + 4.0 * angle).sin() / s5)
}

/// The angular intervals for a rotation angle in `[0, pi/5]`.
///
/// Interior angles give all five; `theta = 0` drops k = 0 and
/// `theta = pi/5` drops k = -2 (those intervals are empty), leaving four
/// plus the coefficient-recovered fifth root.
pub fn intervals_for(theta: f64) -> Result<Vec<AngularInterval>> {
    if !(-EDGE_TOL..=PI / 5.0 + EDGE_TOL).contains(&theta) {
        return Err(Error::OutOfRange("theta must lie in [0, pi/5]"));
    }
    let theta = theta.clamp(0.0, PI / 5.0);
    let all = [
        AngularInterval {
            k: -2,
            lo: -PI + theta,
            hi: -4.0 * PI / 5.0,
            zero_end: IntervalEnd::Lower,
            singular_end: IntervalEnd::Upper,
        },
        AngularInterval {
            k: -1,
            lo: -PI / 2.0 - theta / 4.0,
            hi: -2.0 * PI / 5.0,
            zero_end: IntervalEnd::Lower,
            singular_end: IntervalEnd::Upper,
        },
        AngularInterval {
            k: 0,
            lo: -theta / 4.0,
            hi: 0.0,
            zero_end: IntervalEnd::Lower,
            singular_end: IntervalEnd::Upper,
        },
        AngularInterval {
            k: 1,
            lo: 2.0 * PI / 5.0,
            hi: PI / 2.0 - theta / 4.0,
            zero_end: IntervalEnd::Upper,
            singular_end: IntervalEnd::Lower,
        },
        AngularInterval {
            k: 2,
            lo: 4.0 * PI / 5.0,
            hi: PI - theta / 4.0,
            zero_end: IntervalEnd::Upper,
            singular_end: IntervalEnd::Lower,
        },
    ];
    let drop_k = if theta.abs() < EDGE_TOL {
        Some(0)
    } else if (theta - PI / 5.0).abs() < EDGE_TOL {
        Some(-2)
    } else {
        None
    };
    Ok(all.into_iter().filter(|iv| Some(iv.k) != drop_k).collect())
}

/// Locate the argument where `f = 2 xi` inside one interval.
///
/// The zero end anchors the below-target side of the bracket without being
/// evaluated (`f` is 0 there by construction). The above-target side is
/// found by probing at geometric offsets `w/8, w/16, ...` from the
/// singular end, where `f` grows without bound.
pub fn bisect_angle(
    interval: &AngularInterval,
    theta: f64,
    xi: f64,
    tol_angle: f64,
) -> Result<f64> {
    if xi.is_nan() || xi <= 0.0 {
        return Err(Error::InvalidCoefficient("xi must be positive"));
    }
    let target = 2.0 * xi;
    let zero_pt = interval.zero_point();
    let sing_pt = interval.singular_point();
    let dir = (zero_pt - sing_pt).signum();
    let mut offset = (interval.hi - interval.lo).abs() / 8.0;
    let mut above = None;
    for _ in 0..200 {
        let probe = sing_pt + dir * offset;
        let f = angle_equation(probe, theta).unwrap_or(f64::INFINITY);
        if f - target > 0.0 {
            above = Some(probe);
            break;
        }
        offset *= 0.5;
    }
    let Some(mut above) = above else {
        return Err(Error::BracketFailure { k: interval.k });
    };
    let mut below = zero_pt;
    while (above - below).abs() > tol_angle {
        let mid = 0.5 * (below + above);
        if mid == below || mid == above {
            break;
        }
        let f = angle_equation(mid, theta).unwrap_or(f64::INFINITY);
        if f - target > 0.0 {
            above = mid;
        } else {
            below = mid;
        }
    }
    Ok(0.5 * (below + above))
}

/// `y^5 + u y^4 - 2 xi`, the monic polynomial the root set answers for.
fn poly(p: &Form3Problem, y: Complex64) -> Complex64 {
    let y2 = y * y;
    y2 * y2 * (y + p.u) - Complex64::new(2.0 * p.xi, 0.0)
}

fn poly_residual(p: &Form3Problem, y: Complex64) -> f64 {
    poly(p, y).norm() / (2.0 * p.xi).max(1.0)
}

fn newton_polish(p: &Form3Problem, mut y: Complex64, max_steps: usize) -> Complex64 {
    for _ in 0..max_steps {
        let y2 = y * y;
        let y3 = y2 * y;
        let q = y2 * y2 * (y + p.u) - Complex64::new(2.0 * p.xi, 0.0);
        let noise = f64::EPSILON * (2.0 * p.xi + y2.norm() * y3.norm() * 2.0);
        if q.norm() <= noise {
            break;
        }
        let dq = y3 * (y * 5.0 + p.u * 4.0);
        if dq == Complex64::new(0.0, 0.0) {
            break;
        }
        y -= q / dq;
    }
    y
}

/// Bisection for the two real roots of `y^4 (y + u) = 2 xi` in `(-1, 0)`
/// when `theta = 0` and `2 xi < REAL_PAIR_LIMIT`. The split point is the
/// maximizer -4/5; the width criterion is relative so roots of any
/// magnitude down to the representable floor are resolved.
fn real_negative_root(p: &Form3Problem, mut lo: f64, mut hi: f64) -> Complex64 {
    let g = |y: f64| y.powi(4) * (y + 1.0) - 2.0 * p.xi;
    let g_hi_pos = g(hi) > 0.0;
    for _ in 0..1100 {
        let width = hi - lo;
        let mid = 0.5 * (lo + hi);
        if width <= 1e-15 * lo.abs().max(hi.abs()) || mid == lo || mid == hi {
            break;
        }
        if (g(mid) > 0.0) == g_hi_pos {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    newton_polish(p, Complex64::new(0.5 * (lo + hi), 0.0), 5)
}

/// All five roots of `(y^5 + u y^4)/2 = xi`.
///
/// Each bisection root is residual-gated at `tol` (scale-relative to
/// `max(1, 2 xi)`); the coefficient-recovered fifth root is gated
/// separately so a failure there indicts the other four.
pub fn all_roots_form3(p: &Form3Problem, tol: f64) -> Result<RootSet> {
    let intervals = intervals_for(p.theta)?;
    let theta_is_zero = p.theta.abs() < EDGE_TOL;
    let real_pair = theta_is_zero && 2.0 * p.xi < REAL_PAIR_LIMIT;
    let mut roots: Vec<RootRecord> = Vec::with_capacity(5);

    for interval in &intervals {
        if real_pair && (interval.k == -2 || interval.k == 2) {
            continue;
        }
        let angle = bisect_angle(interval, p.theta, p.xi, ANGLE_TOL)?;
        let radius = radius_at(angle, p.theta)?;
        let value = newton_polish(p, Complex64::from_polar(radius, angle), 5);
        let residual = poly_residual(p, value);
        if residual.is_nan() || residual >= tol {
            return Err(Error::ResidualTooLarge {
                value,
                residual,
                tol,
            });
        }
        roots.push(RootRecord {
            value,
            k: interval.k,
            angle,
            radius,
            residual,
            via: RootProvenance::Bisection,
        });
    }

    if real_pair {
        for (k, lo, hi) in [(-2, -1.0, -0.8), (2, -0.8, -f64::MIN_POSITIVE)] {
            let value = real_negative_root(p, lo, hi);
            let residual = poly_residual(p, value);
            if residual.is_nan() || residual >= tol {
                return Err(Error::ResidualTooLarge {
                    value,
                    residual,
                    tol,
                });
            }
            roots.push(RootRecord {
                value,
                k,
                angle: if k == -2 { -PI } else { PI },
                radius: value.norm(),
                residual,
                via: RootProvenance::Bisection,
            });
        }
    }

    if roots.len() == 4 {
        let have: Vec<i32> = roots.iter().map(|r| r.k).collect();
        let missing = (-2..=2).find(|k| !have.contains(k)).unwrap();
        let value = -p.u
            - roots
                .iter()
                .fold(Complex64::new(0.0, 0.0), |s, r| s + r.value);
        let residual = poly_residual(p, value);
        if residual.is_nan() || residual >= tol {
            return Err(Error::VietaResidualFailure { residual, tol });
        }
        roots.push(RootRecord {
            value,
            k: missing,
            angle: value.arg(),
            radius: value.norm(),
            residual,
            via: RootProvenance::Vieta,
        });
    }

    roots.sort_by_key(|r| r.k);
    debug_assert_eq!(roots.len(), 5);
    Ok(RootSet { roots })
}

/// All five roots of `(z^5 + z^4)/2 = lambda`, via the Form-3 rotation.
pub fn all_roots_form2(p: &Form2Problem, tol: f64) -> Result<RootSet> {
    let p3 = form2_to_form3(p);
    let rs = all_roots_form3(&p3, tol)?;
    let mut roots = Vec::with_capacity(5);
    for rec in rs.roots {
        let z = if p3.conjugated {
            (rec.value / p3.u).conj()
        } else {
            rec.value / p3.u
        };
        let residual = p.residual(z);
        if residual.is_nan() || residual >= tol {
            return Err(Error::ResidualTooLarge {
                value: z,
                residual,
                tol,
            });
        }
        roots.push(RootRecord {
            value: z,
            residual,
            ..rec
        });
    }
    Ok(RootSet { roots })
}

/// All five roots of `x^5 + x + a = 0`: the Form-3 roots mapped back
/// through `x = a u / y` with the conjugation bookkeeping resolved.
pub fn all_roots_form1(p: &Form1Problem, tol: f64) -> Result<RootSet> {
    let p3 = form2_to_form3(&form1_to_form2(p));
    let rs = all_roots_form3(&p3, tol)?;
    let mut roots = Vec::with_capacity(5);
    for rec in rs.roots {
        let x = form3_root_to_form1_root(rec.value, &p3, p)?;
        let residual = p.residual(x);
        if residual.is_nan() || residual >= tol {
            return Err(Error::ResidualTooLarge {
                value: x,
                residual,
                tol,
            });
        }
        roots.push(RootRecord {
            value: x,
            residual,
            ..rec
        });
    }
    Ok(RootSet { roots })
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIFTH: f64 = PI / 5.0;

    #[test]
    fn zero_end_is_zero_and_pole_end_blows_up() {
        for theta in [0.0, 0.05, FIFTH / 2.0, FIFTH - 0.01, FIFTH] {
            for iv in intervals_for(theta).unwrap() {
                // theta = 0 leaves k = +-2 with a removable 0/0 corner
                // instead of a zero; covered by the real-pair path.
                let corner_case = theta == 0.0 && (iv.k == -2 || iv.k == 2);
                if !corner_case {
                    let nudge = 1e-9 * (iv.singular_point() - iv.zero_point()).signum();
                    let f0 = angle_equation(iv.zero_point() + nudge * 1e-4, theta).unwrap();
                    assert!(f0.abs() < 1e-2, "theta={theta} k={} f(zero+)={f0}", iv.k);
                }
                let near_pole =
                    iv.singular_point() - 1e-9 * (iv.singular_point() - iv.zero_point()).signum();
                let f1 = angle_equation(near_pole, theta).unwrap();
                assert!(f1 > 1e12, "theta={theta} k={} f(pole-)={f1}", iv.k);
            }
        }
    }

    #[test]
    fn angle_equation_zero_at_closed_end() {
        for theta in [0.05f64, 0.3, FIFTH] {
            // f(-theta/4) = 0 exactly: theta + 4*(-theta/4) == 0 in floats.
            assert_eq!(angle_equation(-theta / 4.0, theta).unwrap(), 0.0);
        }
    }

    #[test]
    fn angle_equation_pole_is_error() {
        assert!(matches!(
            angle_equation(0.0, 0.3),
            Err(Error::PoleEvaluation)
        ));
    }

    #[test]
    fn radius_collapses_at_zero_end() {
        let theta = 0.3;
        let r = radius_at(-theta / 4.0, theta).unwrap();
        assert_eq!(r, 0.0);
    }

    #[test]
    fn radius_positive_inside_intervals() {
        let theta = PI / 10.0;
        for iv in intervals_for(theta).unwrap() {
            let mid = 0.5 * (iv.lo + iv.hi);
            assert!(radius_at(mid, theta).unwrap() > 0.0, "k={}", iv.k);
        }
    }

    #[test]
    fn interval_count_and_bounds() {
        let ivs = intervals_for(PI / 10.0).unwrap();
        assert_eq!(ivs.len(), 5);
        let i0 = ivs.iter().find(|iv| iv.k == 0).unwrap();
        assert!((i0.lo + PI / 40.0).abs() < 1e-15);
        assert_eq!(i0.hi, 0.0);

        let ivs0 = intervals_for(0.0).unwrap();
        assert_eq!(ivs0.len(), 4);
        assert!(ivs0.iter().all(|iv| iv.k != 0));
        let m2 = ivs0.iter().find(|iv| iv.k == -2).unwrap();
        assert!((m2.lo + PI).abs() < 1e-15);

        let ivs5 = intervals_for(FIFTH).unwrap();
        assert_eq!(ivs5.len(), 4);
        assert!(ivs5.iter().all(|iv| iv.k != -2));
        let i2 = ivs5.iter().find(|iv| iv.k == 2).unwrap();
        assert!((i2.hi - 19.0 * PI / 20.0).abs() < 1e-15);

        assert!(matches!(intervals_for(-0.2), Err(Error::OutOfRange(_))));
        assert!(matches!(
            intervals_for(FIFTH + 0.1),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn intervals_disjoint_and_ordered() {
        for theta in [1e-6, 0.1, 0.3, FIFTH - 1e-6] {
            let ivs = intervals_for(theta).unwrap();
            for w in ivs.windows(2) {
                assert!(w[0].lo < w[0].hi);
                assert!(w[0].hi <= w[1].lo, "theta={theta}");
            }
        }
    }

    #[test]
    fn polar_reconstruction_is_already_close() {
        // r e^(i sigma) from the bisected angle lands within 1e-6 of the
        // polished root; the polish only cleans up the last digits.
        for (xi, theta) in [
            (5e-9, FIFTH),
            (2.0, 0.11),
            (75.753, 0.2288),
            (1e4, FIFTH / 2.0),
        ] {
            let p = Form3Problem::new(xi, theta).unwrap();
            let rs = all_roots_form3(&p, 1e-10).unwrap();
            for iv in intervals_for(theta).unwrap() {
                let angle = bisect_angle(&iv, theta, xi, ANGLE_TOL).unwrap();
                let seed = Complex64::from_polar(radius_at(angle, theta).unwrap(), angle);
                let nearest = rs
                    .roots
                    .iter()
                    .map(|r| (seed - r.value).norm())
                    .fold(f64::INFINITY, f64::min);
                assert!(
                    nearest < 1e-6,
                    "k={} reconstruction off by {nearest:.3e}",
                    iv.k
                );
            }
        }
    }

    #[test]
    fn second_example_angle() {
        // xi, theta of the a = 3.08 + 1.68i problem; the k = 0 argument and
        // modulus recover the tabulated root.
        let p = Form1Problem::new(Complex64::new(3.08, 1.68)).unwrap();
        let p3 = form2_to_form3(&form1_to_form2(&p));
        let ivs = intervals_for(p3.theta).unwrap();
        let i0 = ivs.iter().find(|iv| iv.k == 0).unwrap();
        let angle = bisect_angle(i0, p3.theta, p3.xi, ANGLE_TOL).unwrap();
        assert!((angle + 0.013583862).abs() < 1e-8, "angle {angle}");
        let f = angle_equation(angle, p3.theta).unwrap();
        assert!((f - 2.0 * p3.xi).abs() < 1e-6 * 2.0 * p3.xi);
        let r = radius_at(angle, p3.theta).unwrap();
        assert!((r - 2.558255352).abs() < 1e-8);
    }

    #[test]
    fn tiny_xi_argument_collapses_to_zero_end() {
        let theta = PI / 10.0;
        let ivs = intervals_for(theta).unwrap();
        let i0 = ivs.iter().find(|iv| iv.k == 0).unwrap();
        let angle = bisect_angle(i0, theta, 1e-12, ANGLE_TOL).unwrap();
        assert!((angle + theta / 4.0).abs() < 1e-3);
    }

    #[test]
    fn first_example_all_roots() {
        let p1 = Form1Problem::new(Complex64::new(0.01, 0.0)).unwrap();
        let p3 = form2_to_form3(&form1_to_form2(&p1));
        let rs = all_roots_form3(&p3, 1e-10).unwrap();
        assert_eq!(rs.roots.len(), 5);
        let expected = [
            (-2, -0.8090170025, -0.5877852582),
            (-1, -0.0015494319, -0.0098971415),
            (0, 0.0098621565, -0.0015443338),
            (1, 0.0015788252, 0.0098566936),
            (2, -0.0098915418, 0.0015847876),
        ];
        for (rec, (k, re, im)) in rs.roots.iter().zip(expected) {
            assert_eq!(rec.k, k);
            assert!(
                (rec.value - Complex64::new(re, im)).norm() < 1e-9,
                "k={k}: {} vs {re}+{im}i",
                rec.value
            );
        }
        // theta = pi/5: the k = -2 root comes from the coefficient sum.
        assert_eq!(rs.roots[0].via, RootProvenance::Vieta);
        assert!((rs.sum() + p3.u).norm() < 1e-9);
    }

    #[test]
    fn second_example_all_roots_form1() {
        let p1 = Form1Problem::new(Complex64::new(3.08, 1.68)).unwrap();
        let rs = all_roots_form1(&p1, 1e-10).unwrap();
        let expected = [
            (-2, -1.1834415151, -0.1608289168),
            (-1, -0.6073896190, 1.1531182439),
            (0, 1.0110954185, 0.9265109088),
            (1, 1.1167847470, -0.7383651957),
            (2, -0.3370490315, -1.1804350402),
        ];
        for (rec, (k, re, im)) in rs.roots.iter().zip(expected) {
            assert_eq!(rec.k, k);
            assert!((rec.value - Complex64::new(re, im)).norm() < 1e-9);
        }
        assert!(rs.sum().norm() < 1e-9);
        assert!((rs.product() + p1.a).norm() < 1e-9 * p1.a.norm().max(1.0));
    }

    #[test]
    fn real_axis_large_target() {
        // theta = 0 with 2 xi above the real-pair limit: k = +-2 carry a
        // complex conjugate pair found by the angular bisection.
        let p = Form3Problem::new(1.0, 0.0).unwrap();
        let rs = all_roots_form3(&p, 1e-10).unwrap();
        assert_eq!(rs.roots.len(), 5);
        let k0 = rs.roots.iter().find(|r| r.k == 0).unwrap();
        assert_eq!(k0.via, RootProvenance::Vieta);
        assert!((k0.value - Complex64::new(1.0, 0.0)).norm() < 1e-10);
        assert!((rs.sum() + Complex64::new(1.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn real_axis_small_target_real_pair() {
        // theta = 0 with 2 xi below the limit: two real roots in (-1, 0).
        let p = Form3Problem::new(0.01, 0.0).unwrap();
        let rs = all_roots_form3(&p, 1e-10).unwrap();
        let m2 = rs.roots.iter().find(|r| r.k == -2).unwrap();
        let p2 = rs.roots.iter().find(|r| r.k == 2).unwrap();
        assert_eq!(m2.value.im, 0.0);
        assert_eq!(p2.value.im, 0.0);
        assert!(m2.value.re < -0.8 && p2.value.re > -0.8);
        assert!((m2.value.re + 0.9781523911).abs() < 1e-9);
        assert!((p2.value.re + 0.4334610215).abs() < 1e-9);
        for r in &rs.roots {
            assert!(r.residual < 1e-10);
        }
    }

    #[test]
    fn form1_real_negative_a_has_positive_real_root() {
        // x^5 + x - 2 has exactly one positive real root.
        let p = Form1Problem::new(Complex64::new(-2.0, 0.0)).unwrap();
        let rs = all_roots_form1(&p, 1e-10).unwrap();
        let real_pos: Vec<_> = rs
            .roots
            .iter()
            .filter(|r| r.value.im.abs() < 1e-9 && r.value.re > 0.0)
            .collect();
        assert_eq!(real_pos.len(), 1);
        assert!(p.residual(real_pos[0].value) < 1e-12);
    }

    #[test]
    fn enormous_target_fails_with_bracket_error() {
        // Past the angular-resolution ceiling the root argument is within
        // one ulp of the pole; the bracket search reports that honestly.
        let p = Form3Problem::new(1e299, 0.3).unwrap();
        assert!(matches!(
            all_roots_form3(&p, 1e-10),
            Err(Error::BracketFailure { .. })
        ));
    }

    #[test]
    fn form2_roots_satisfy_their_equation() {
        let p = Form2Problem::new(Complex64::new(-5e-9, 0.0)).unwrap();
        let rs = all_roots_form2(&p, 1e-10).unwrap();
        assert_eq!(rs.roots.len(), 5);
        for r in &rs.roots {
            assert!(p.residual(r.value) < 1e-10);
        }
    }
}
