//! Independent ground truth: a simultaneous-iteration root finder for
//! degree-5 polynomials, plus residual and coefficient-identity checkers.
//!
//! Used only by tests and by the CLI's verify mode. Nothing here calls into
//! the radical or bisection solvers, so agreement between the two sides is
//! meaningful evidence.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::reductions::Form3Problem;

const MAX_SWEEPS: usize = 500;
const SWEEP_TOL: f64 = 1e-14;
const POLISH_STEPS: usize = 3;

/// Coefficients `c[0] + c[1] x + ... + c[5] x^5` with `c[5] != 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuinticCoefficients {
    pub c: [Complex64; 6],
}

impl QuinticCoefficients {
    pub fn new(c: [Complex64; 6]) -> Result<Self> {
        if c[5] == Complex64::new(0.0, 0.0) {
            return Err(Error::InvalidCoefficient(
                "leading coefficient must be nonzero",
            ));
        }
        Ok(Self { c })
    }

    /// `x^5 + x + a`.
    pub fn form1(a: Complex64) -> Self {
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        Self {
            c: [a, one, zero, zero, zero, one],
        }
    }

    /// `z^5 + z^4 - 2 lambda`.
    pub fn form2(lambda: Complex64) -> Self {
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        Self {
            c: [-2.0 * lambda, zero, zero, zero, one, one],
        }
    }

    /// `y^5 + u y^4 - 2 xi`.
    pub fn form3(p: &Form3Problem) -> Self {
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        Self {
            c: [Complex64::new(-2.0 * p.xi, 0.0), zero, zero, zero, p.u, one],
        }
    }

    /// `v^5 + d1 v + d0`.
    pub fn bring_jerrard(d1: Complex64, d0: Complex64) -> Self {
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        Self {
            c: [d0, d1, zero, zero, zero, one],
        }
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        let mut acc = self.c[5];
        for k in (0..5).rev() {
            acc = acc * x + self.c[k];
        }
        acc
    }

    fn eval_derivative(&self, x: Complex64) -> Complex64 {
        let mut acc = self.c[5] * 5.0;
        for k in (1..5).rev() {
            acc = acc * x + self.c[k] * k as f64;
        }
        acc
    }

    fn coefficient_scale(&self) -> f64 {
        self.c.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// All five roots by Weierstrass/Durand-Kerner simultaneous iteration,
/// refined by a short Newton polish per root. Deterministic: the starting
/// points are five fixed points on a circle of radius
/// `1 + max_k |c_k / c_5|`, offset 0.4 rad off the root-of-unity angles to
/// break symmetric inputs.
pub fn oracle_roots(q: &QuinticCoefficients) -> Result<[Complex64; 5]> {
    let lead = q.c[5];
    let radius = 1.0
        + q.c[..5]
            .iter()
            .map(|c| (c / lead).norm())
            .fold(0.0, f64::max);
    let mut xs = [Complex64::new(0.0, 0.0); 5];
    for (j, x) in xs.iter_mut().enumerate() {
        *x = Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * j as f64 / 5.0 + 0.4);
    }

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut max_update = 0.0f64;
        let scale = xs.iter().map(|x| x.norm()).fold(1.0, f64::max);
        for j in 0..5 {
            let mut denom = lead;
            for m in 0..5 {
                if m != j {
                    denom *= xs[j] - xs[m];
                }
            }
            if denom == Complex64::new(0.0, 0.0) {
                // Collided iterates: nudge apart and keep sweeping.
                xs[j] += Complex64::new(1e-12 * (1.0 + xs[j].norm()), 0.0);
                continue;
            }
            let update = q.eval(xs[j]) / denom;
            xs[j] -= update;
            max_update = max_update.max(update.norm());
        }
        if max_update < SWEEP_TOL * scale {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence);
    }

    for x in xs.iter_mut() {
        for _ in 0..POLISH_STEPS {
            let d = q.eval_derivative(*x);
            if d == Complex64::new(0.0, 0.0) {
                break;
            }
            *x -= q.eval(*x) / d;
        }
    }

    let scale = q
        .coefficient_scale()
        .max(xs.iter().map(|x| x.norm().powi(5)).fold(1.0, f64::max));
    for x in &xs {
        let residual = q.eval(*x).norm();
        if residual.is_nan() || residual > 1e-12 * scale {
            return Err(Error::NoConvergence);
        }
    }
    Ok(xs)
}

/// The root closest to `target` and its distance. Ties go to the earliest
/// entry after sorting by (re, im).
pub fn nearest_root(target: Complex64, roots: &[Complex64; 5]) -> (Complex64, f64) {
    let mut sorted = *roots;
    sorted.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
    let mut best = sorted[0];
    let mut best_d = (target - sorted[0]).norm();
    for r in &sorted[1..] {
        let d = (target - r).norm();
        if d < best_d {
            best = *r;
            best_d = d;
        }
    }
    (best, best_d)
}

/// One coefficient identity: the elementary symmetric function of the roots
/// against its value read off the coefficients.
#[derive(Debug, Clone, Copy)]
pub struct VietaIdentity {
    /// Degree of the symmetric function (1 = sum ... 5 = product).
    pub degree: usize,
    pub expected: Complex64,
    pub actual: Complex64,
    pub pass: bool,
}

/// Per-identity report from [`vieta_check`].
#[derive(Debug, Clone)]
pub struct VietaReport {
    pub identities: [VietaIdentity; 5],
}

impl VietaReport {
    pub fn all_pass(&self) -> bool {
        self.identities.iter().all(|i| i.pass)
    }
}

/// Compare the elementary symmetric functions `e_k` of `roots` against
/// `(-1)^k c[5-k]/c[5]`, each within `tol * max(1, |expected|)`.
pub fn vieta_check(q: &QuinticCoefficients, roots: &[Complex64; 5], tol: f64) -> VietaReport {
    // Build e_1..e_5 incrementally: multiply out prod (t + r_i).
    let mut e = [Complex64::new(0.0, 0.0); 6];
    e[0] = Complex64::new(1.0, 0.0);
    for (i, r) in roots.iter().enumerate() {
        for k in (1..=i + 1).rev() {
            e[k] += e[k - 1] * r;
        }
    }
    let identities = std::array::from_fn(|i| {
        let k = i + 1;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let expected = q.c[5 - k] / q.c[5] * sign;
        let actual = e[k];
        VietaIdentity {
            degree: k,
            expected,
            actual,
            pass: (expected - actual).norm() <= tol * expected.norm().max(1.0),
        }
    });
    VietaReport { identities }
}
