//! Reductions between the equation forms the solvers work on.
//!
//! The chain is
//!
//! ```text
//! v^5 + d1 v + d0 = 0          (Bring-Jerrard, general trinomial-reducible)
//!   x = v / d1^(1/4)
//! x^5 + x + a = 0              (Form 1, a = d0 / d1^(5/4))
//!   z = a / x
//! (z^5 + z^4)/2 = lambda       (Form 2, lambda = -a^4/2)
//!   y = u z,  u^5 = |lambda|/lambda
//! (y^5 + u y^4)/2 = xi         (Form 3, xi = |lambda| > 0, u = e^(i theta))
//! ```
//!
//! Form 3 is solved with the rotation angle normalized to `0 <= theta <=
//! pi/5`. When the branch root of `|lambda|/lambda` has a negative argument
//! the problem is replaced by its complex conjugate and the `conjugated`
//! flag records that the solutions must be conjugated back.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::branch::{branch_nth_root, branch_root_arg};
use crate::error::{Error, Result};

/// Residual gate applied when mapping a converged Form-3 root back to
/// Form 1; failure signals a conjugation or branch bookkeeping bug.
pub const BACKMAP_RESIDUAL_TOL: f64 = 1e-10;

/// `v^5 + d1 v + d0 = 0`. No invariants: the degenerate cases `d1 = 0` and
/// `d0 = 0` are solved in closed form by the reduction itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BringJerrardProblem {
    pub d1: Complex64,
    pub d0: Complex64,
}

/// `x^5 + x + a = 0` with `a != 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Form1Problem {
    pub a: Complex64,
}

impl Form1Problem {
    pub fn new(a: Complex64) -> Result<Self> {
        if a == Complex64::new(0.0, 0.0) {
            return Err(Error::InvalidCoefficient("a must be nonzero"));
        }
        if !a.is_finite() {
            return Err(Error::InvalidCoefficient("a must be finite"));
        }
        Ok(Self { a })
    }

    /// `x^5 + x + a`.
    pub fn eval(&self, x: Complex64) -> Complex64 {
        let x2 = x * x;
        x2 * x2 * x + x + self.a
    }

    /// `|x^5 + x + a| / max(1, |x|^5)`.
    pub fn residual(&self, x: Complex64) -> f64 {
        self.eval(x).norm() / x.norm().powi(5).max(1.0)
    }
}

/// `(z^5 + z^4)/2 = lambda` with `lambda != 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Form2Problem {
    pub lambda: Complex64,
}

impl Form2Problem {
    pub fn new(lambda: Complex64) -> Result<Self> {
        if lambda == Complex64::new(0.0, 0.0) {
            return Err(Error::InvalidCoefficient("lambda must be nonzero"));
        }
        if !lambda.is_finite() {
            return Err(Error::InvalidCoefficient("lambda must be finite"));
        }
        Ok(Self { lambda })
    }

    /// `(z^5 + z^4)/2 - lambda`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let z2 = z * z;
        z2 * z2 * (z + Complex64::new(1.0, 0.0)) * 0.5 - self.lambda
    }

    /// `|(z^5 + z^4)/2 - lambda| / max(1, |lambda|)`.
    pub fn residual(&self, z: Complex64) -> f64 {
        self.eval(z).norm() / self.lambda.norm().max(1.0)
    }
}

/// `(y^5 + u y^4)/2 = xi` with `xi > 0`, `u = e^(i theta)`,
/// `theta in [0, pi/5]`.
///
/// `conjugated` records whether this problem is the conjugate of the one the
/// caller actually posed; if so, solutions of the original problem are the
/// conjugates of the solutions of this one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Form3Problem {
    pub xi: f64,
    pub theta: f64,
    pub u: Complex64,
    pub conjugated: bool,
}

impl Form3Problem {
    pub fn new(xi: f64, theta: f64) -> Result<Self> {
        if xi.is_nan() || xi <= 0.0 || !xi.is_finite() {
            return Err(Error::InvalidCoefficient("xi must be positive and finite"));
        }
        if !(-1e-15..=PI / 5.0 + 1e-15).contains(&theta) {
            return Err(Error::OutOfRange("theta must lie in [0, pi/5]"));
        }
        let theta = theta.clamp(0.0, PI / 5.0);
        Ok(Self {
            xi,
            theta,
            u: Complex64::from_polar(1.0, theta),
            conjugated: false,
        })
    }

    /// `(y^5 + u y^4)/2 - xi`.
    pub fn eval(&self, y: Complex64) -> Complex64 {
        let y2 = y * y;
        y2 * y2 * (y + self.u) * 0.5 - self.xi
    }

    /// `|(y^5 + u y^4)/2 - xi| / max(1, xi)`.
    pub fn residual(&self, y: Complex64) -> f64 {
        self.eval(y).norm() / self.xi.max(1.0)
    }
}

/// Outcome of the Bring-Jerrard reduction: either a Form-1 problem together
/// with the scale mapping its roots back (`v = scale * x`), or the five
/// roots solved directly for the degenerate coefficients.
#[derive(Debug, Clone)]
pub enum BringJerrardReduction {
    Reduced {
        problem: Form1Problem,
        scale: Complex64,
    },
    Direct([Complex64; 5]),
}

/// Reduce `v^5 + d1 v + d0 = 0` to Form 1, or solve it outright when
/// `d1 = 0` (pure fifth roots) or `d0 = 0` (zero plus fourth roots).
///
/// The scale is `s = d1^(1/4)` (branch root) and `a = d0 / (d1 * s)`, i.e.
/// `a = d0 / s^5` computed without forming `d1^5`; using one consistent
/// fourth root everywhere is what makes `v = s * x` carry roots across.
pub fn bring_jerrard_to_form1(p: &BringJerrardProblem) -> BringJerrardReduction {
    let zero = Complex64::new(0.0, 0.0);
    if p.d1 == zero {
        let w = branch_nth_root(-p.d0, 5);
        let mut roots = [zero; 5];
        for (k, r) in roots.iter_mut().enumerate() {
            *r = w * Complex64::from_polar(1.0, 2.0 * PI * k as f64 / 5.0);
        }
        return BringJerrardReduction::Direct(roots);
    }
    if p.d0 == zero {
        let w = branch_nth_root(-p.d1, 4);
        let i = Complex64::new(0.0, 1.0);
        return BringJerrardReduction::Direct([zero, w, w * i, -w, -w * i]);
    }
    let scale = branch_nth_root(p.d1, 4);
    let a = p.d0 / (p.d1 * scale);
    BringJerrardReduction::Reduced {
        problem: Form1Problem { a },
        scale,
    }
}

/// `lambda = -a^4 / 2`; the substitution `z = a/x` is a bijection between
/// the root sets (neither equation has 0 as a root).
pub fn form1_to_form2(p: &Form1Problem) -> Form2Problem {
    let a2 = p.a * p.a;
    Form2Problem {
        lambda: a2 * a2 * -0.5,
    }
}

/// Rotate Form 2 onto the positive real target: `xi = |lambda|`,
/// `u = (|lambda|/lambda)^(1/5)` by the branch root, then conjugate the
/// problem if that root's argument is negative so that `theta in [0, pi/5]`.
///
/// The argument of `|lambda|/lambda` is `-Arg(lambda)`; working with the
/// argument directly keeps `|lambda|` near the overflow threshold safe.
pub fn form2_to_form3(p: &Form2Problem) -> Form3Problem {
    let xi = p.lambda.norm();
    let mut theta0 = branch_root_arg(-p.lambda.arg(), 5);
    if theta0 == 0.0 {
        theta0 = 0.0; // normalize -0.0
    }
    let u0 = Complex64::from_polar(1.0, theta0);
    if theta0 >= 0.0 {
        Form3Problem {
            xi,
            theta: theta0,
            u: u0,
            conjugated: false,
        }
    } else {
        Form3Problem {
            xi,
            theta: -theta0,
            u: u0.conj(),
            conjugated: true,
        }
    }
}

/// Map a converged Form-3 root back to a Form-1 root.
///
/// Without conjugation this is `x = a u / y`. With it, the root of the
/// original (unconjugated) problem is `conj(y)`, and the rotation that was
/// actually applied is `conj(u)`, so `x = a conj(u) / conj(y)`. The result
/// is residual-checked; a failure here means the frame bookkeeping is
/// broken, not that the input was slightly off.
pub fn form3_root_to_form1_root(
    y: Complex64,
    p3: &Form3Problem,
    p1: &Form1Problem,
) -> Result<Complex64> {
    if y == Complex64::new(0.0, 0.0) {
        return Err(Error::InvalidCoefficient("form-3 root must be nonzero"));
    }
    let x = if p3.conjugated {
        p1.a * p3.u.conj() / y.conj()
    } else {
        p1.a * p3.u / y
    };
    let residual = p1.residual(x);
    if residual.is_nan() || residual >= BACKMAP_RESIDUAL_TOL {
        return Err(Error::ResidualTooLarge {
            value: x,
            residual,
            tol: BACKMAP_RESIDUAL_TOL,
        });
    }
    Ok(x)
}
