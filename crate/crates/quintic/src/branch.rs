//! Complex n-th roots under a fixed branch convention.
//!
//! Every formula in this crate uses the n-th root whose argument lies in
//! `[-pi/n, pi/n)` — left-closed, right-open. This differs from the common
//! principal root (argument in `(-pi/n, pi/n]`) exactly on the negative real
//! axis: here `(-1)^(1/5) = e^(-i pi/5)`, not `e^(+i pi/5)`.

use num_complex::Complex64;
use std::f64::consts::PI;

/// n-th root of `z` with argument in `[-pi/n, pi/n)`.
///
/// `branch_nth_root(0, n)` is 0 by convention. The seam input Arg(z) = pi
/// folds to the left end of the interval: the raw argument pi/n is mapped
/// to -pi/n.
pub fn branch_nth_root(z: Complex64, n: u32) -> Complex64 {
    debug_assert!(n >= 1);
    if z == Complex64::new(0.0, 0.0) {
        return Complex64::new(0.0, 0.0);
    }
    let nf = f64::from(n);
    let r = z.norm().powf(nf.recip());
    let mut arg = z.arg() / nf;
    let seam = PI / nf;
    if arg >= seam {
        arg = -seam;
    }
    Complex64::from_polar(r, arg)
}

/// Argument of the branch n-th root of a unit-modulus direction given the
/// argument of `z` itself. Shares the seam fold with [`branch_nth_root`].
pub(crate) fn branch_root_arg(z_arg: f64, n: u32) -> f64 {
    let nf = f64::from(n);
    let arg = z_arg / nf;
    let seam = PI / nf;
    if arg >= seam {
        -seam
    } else {
        arg
    }
}

/// `z^(p/q)` built as the branch q-th root raised to the integer power p.
///
/// For positive real `z` this is the positive real power. Requires `z != 0`
/// when `p < 0`.
pub fn rational_power(z: Complex64, p: i32, q: u32) -> Complex64 {
    branch_nth_root(z, q).powi(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn positive_real_input() {
        assert!(close(
            branch_nth_root(Complex64::new(32.0, 0.0), 5),
            Complex64::new(2.0, 0.0),
            1e-15
        ));
    }

    #[test]
    fn negative_real_takes_left_closed_branch() {
        // Fifth roots of -1 have arguments +-pi/5, +-3pi/5, pi; only -pi/5
        // lies in [-pi/5, pi/5).
        let w = branch_nth_root(Complex64::new(-1.0, 0.0), 5);
        let expected = Complex64::new((PI / 5.0).cos(), -(PI / 5.0).sin());
        assert!(close(w, expected, 1e-15), "{w} vs {expected}");

        // Both signed zeros of the imaginary part land on the same root.
        let w2 = branch_nth_root(Complex64::new(-1.0, -0.0), 5);
        assert!(close(w2, expected, 1e-15));
    }

    #[test]
    fn imaginary_unit_fourth_root() {
        let w = branch_nth_root(Complex64::new(0.0, 1.0), 4);
        let expected = Complex64::from_polar(1.0, PI / 8.0);
        assert!(close(w, expected, 1e-15));
    }

    #[test]
    fn zero_maps_to_zero() {
        assert_eq!(
            branch_nth_root(Complex64::new(0.0, 0.0), 7),
            Complex64::new(0.0, 0.0)
        );
    }

    #[test]
    fn rational_power_spot_values() {
        assert!(close(
            rational_power(Complex64::new(1.0, 0.0), 2, 9),
            Complex64::new(1.0, 0.0),
            1e-15
        ));
        // 512^(1/9) = 2, squared = 4
        assert!(close(
            rational_power(Complex64::new(512.0, 0.0), 2, 9),
            Complex64::new(4.0, 0.0),
            1e-14
        ));
    }

    #[test]
    fn starting_point_power_matches_scalar_arithmetic() {
        // (5e-9 / alpha)^(2/9) with alpha = sqrt((2+sqrt(2))/4); value from
        // an independent scalar computation.
        let alpha = ((2.0 + 2f64.sqrt()) / 4.0).sqrt();
        let z = Complex64::new(5e-9 / alpha, 0.0);
        let w = rational_power(z, 2, 9);
        assert!((w.re - 0.014553508432900443).abs() < 1e-12);
        assert_eq!(w.im, 0.0);
    }

    #[test]
    fn seam_argument_is_left_end() {
        for n in [2u32, 4, 5, 9] {
            let w = branch_nth_root(Complex64::new(-7.25, 0.0), n);
            let a = w.arg();
            assert!(
                (a + PI / f64::from(n)).abs() < 1e-15,
                "n={n}: arg {a} should be -pi/n"
            );
        }
    }
}
