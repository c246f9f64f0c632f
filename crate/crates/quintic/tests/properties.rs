//! Property tests: branch-convention laws, reduction round trips, root
//! location, and cross-checks between the two solvers and the oracle.

use num_complex::Complex64;
use proptest::prelude::*;
use std::f64::consts::PI;

use quintic::oracle::{oracle_roots, vieta_check, QuinticCoefficients};
use quintic::reductions::BACKMAP_RESIDUAL_TOL;
use quintic::{
    all_roots_form1, all_roots_form3, branch_nth_root, bring_jerrard_to_form1, form1_to_form2,
    form2_to_form3, form3_root_to_form1_root, radical_step, solve_form1, solve_form3,
    BringJerrardProblem, BringJerrardReduction, Form1Problem, Form2Problem, Form3Problem,
};

/// Nonzero complex numbers spanning many magnitudes.
fn nonzero_complex() -> impl Strategy<Value = Complex64> {
    (-30.0f64..30.0, 0.0f64..(2.0 * PI))
        .prop_map(|(log_mod, arg)| Complex64::from_polar(log_mod.exp2(), arg - PI))
}

/// Nonzero complex numbers within a few decades of 1.
fn compact_nonzero_complex() -> impl Strategy<Value = Complex64> {
    (-7.0f64..7.0, 0.0f64..(2.0 * PI))
        .prop_map(|(log_mod, arg)| Complex64::from_polar(log_mod.exp2(), arg - PI))
}

proptest! {
    /// w^n recovers z to 1e-14 relative, and Arg(w) stays inside
    /// [-pi/n, pi/n).
    #[test]
    fn branch_root_round_trip(z in nonzero_complex(), n in 2u32..=9) {
        let w = branch_nth_root(z, n);
        let back = w.powu(n);
        prop_assert!((back - z).norm() <= 1e-14 * z.norm(),
            "n={n} z={z} w={w} back={back}");
        let limit = PI / f64::from(n);
        let arg = w.arg();
        prop_assert!((-limit..limit).contains(&arg), "arg {arg} outside [-pi/n, pi/n)");
    }

    /// Conjugation commutes with the branch root away from the seam.
    #[test]
    fn branch_root_conjugation(z in nonzero_complex(), n in 2u32..=9) {
        prop_assume!(z.im != 0.0);
        let a = branch_nth_root(z.conj(), n);
        let b = branch_nth_root(z, n).conj();
        prop_assert!((a - b).norm() <= 1e-14 * a.norm());
    }

    /// On the seam itself conjugation symmetry must break: the root of a
    /// negative real sits at -pi/n on both sides.
    #[test]
    fn branch_root_seam_asymmetry(m in 1e-3f64..1e3, n in 2u32..=9) {
        let z = Complex64::new(-m, 0.0);
        let w = branch_nth_root(z, n);
        prop_assert!((w.arg() + PI / f64::from(n)).abs() < 1e-15);
        prop_assert!((branch_nth_root(z.conj(), n) - w).norm() < 1e-15 * w.norm());
        // ... so it cannot equal conj(w) (which has argument +pi/n).
        prop_assert!((branch_nth_root(z.conj(), n) - w.conj()).norm() > w.norm() * 0.1);
    }

    /// The rotated problem always lands in the normalized angle range with
    /// a unimodular rotation.
    #[test]
    fn rotation_normalization(lambda in nonzero_complex()) {
        let p3 = form2_to_form3(&Form2Problem { lambda });
        prop_assert!((0.0..=PI / 5.0 + 1e-15).contains(&p3.theta));
        prop_assert!((p3.u * Complex64::from_polar(1.0, -p3.theta)
            - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        prop_assert!((p3.xi - lambda.norm()).abs() <= 1e-14 * lambda.norm());
    }

    /// Degenerate d1 = 0 reduction: exactly five values whose fifth powers
    /// equal -d0.
    #[test]
    fn bring_jerrard_pure_fifth_roots(d0 in nonzero_complex()) {
        let r = bring_jerrard_to_form1(&BringJerrardProblem {
            d1: Complex64::new(0.0, 0.0),
            d0,
        });
        match r {
            BringJerrardReduction::Direct(roots) => {
                for v in roots {
                    prop_assert!((v.powu(5) + d0).norm() <= 1e-13 * d0.norm());
                }
            }
            _ => prop_assert!(false, "expected direct roots"),
        }
    }

    /// The reduction's scale really carries Form-1 roots to Bring-Jerrard
    /// roots. Moduli are kept within a few decades so the derived `a`
    /// rarely leaves the band the assume below accepts.
    #[test]
    fn bring_jerrard_scale_consistency(
        d1 in compact_nonzero_complex(),
        d0 in compact_nonzero_complex(),
    ) {
        let p = BringJerrardProblem { d1, d0 };
        if let BringJerrardReduction::Reduced { problem, scale } = bring_jerrard_to_form1(&p) {
            // The radical iteration works at unit scale, so its relative
            // accuracy fades for |a| outside the desk-scale band.
            prop_assume!(problem.a.norm() > 1e-3 && problem.a.norm() < 1e3);
            let (est, _) = solve_form1(&problem, 1e-12, 25).unwrap();
            let v = scale * est.value;
            let value = {
                let v2 = v * v;
                v2 * v2 * v + d1 * v + d0
            };
            let scale_ref = v.norm().powi(5)
                .max((d1 * v).norm())
                .max(d0.norm())
                .max(1.0);
            prop_assert!(value.norm() <= 1e-9 * scale_ref,
                "bj residual {} at v={v}", value.norm());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Converged radical roots sit in the proven angular slice
    /// [-theta/4, 0] (closed at 0 to admit the real-axis case).
    #[test]
    fn radical_root_location(
        log_xi in -9.0f64..9.0,
        t in 0.0f64..=1.0,
    ) {
        let p = Form3Problem::new(10f64.powf(log_xi), t * PI / 5.0).unwrap();
        let (est, _) = solve_form3(&p, 1e-12, 25).unwrap();
        let arg = est.value.arg();
        prop_assert!(arg <= 1e-9, "arg {arg}");
        prop_assert!(arg >= -p.theta / 4.0 - 1e-9, "arg {arg} theta {}", p.theta);
        prop_assert!(est.residual < 1e-10);
    }

    /// A converged root is a fixed point of the step map.
    #[test]
    fn radical_fixed_point(
        log_xi in -6.0f64..6.0,
        t in 0.0f64..=1.0,
    ) {
        let p = Form3Problem::new(10f64.powf(log_xi), t * PI / 5.0).unwrap();
        let (est, _) = solve_form3(&p, 1e-13, 25).unwrap();
        let stepped = radical_step(&p, est.value).unwrap();
        prop_assert!((stepped - est.value).norm() <= 1e-11 * est.value.norm().max(1.0));
    }

    /// Any root of the rotated problem maps back to a Form-1 root within
    /// the back-map residual gate.
    #[test]
    fn reduction_round_trip(a in nonzero_complex()) {
        prop_assume!(a.norm() > 1e-4 && a.norm() < 1e4);
        let p1 = Form1Problem::new(a).unwrap();
        let p3 = form2_to_form3(&form1_to_form2(&p1));
        let rs = all_roots_form3(&p3, 1e-10).unwrap();
        for rec in &rs.roots {
            let x = form3_root_to_form1_root(rec.value, &p3, &p1).unwrap();
            prop_assert!(p1.residual(x) < BACKMAP_RESIDUAL_TOL);
        }
    }

    /// Five roots from the angular bisection match the oracle as a
    /// multiset and satisfy the coefficient identities.
    #[test]
    fn trig_roots_match_oracle(
        log_xi in -4.0f64..4.0,
        t in 0.0f64..=1.0,
    ) {
        let p = Form3Problem::new(10f64.powf(log_xi), t * PI / 5.0).unwrap();
        let rs = all_roots_form3(&p, 1e-10).unwrap();
        let q = QuinticCoefficients::form3(&p);
        let oracle = oracle_roots(&q).unwrap();
        let mut remaining: Vec<Complex64> = oracle.to_vec();
        for rec in &rs.roots {
            let (j, d) = remaining
                .iter()
                .enumerate()
                .map(|(j, r)| (j, (rec.value - r).norm()))
                .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
                .unwrap();
            prop_assert!(d < 1e-8, "distance {d}");
            remaining.remove(j);
        }
        let values: Vec<Complex64> = rs.values();
        let arr: [Complex64; 5] = values.try_into().unwrap();
        prop_assert!(vieta_check(&q, &arr, 1e-9).all_pass());
    }

    /// Form-1 root sets satisfy sum = 0 and product = -a.
    #[test]
    fn form1_vieta(a in nonzero_complex()) {
        prop_assume!(a.norm() > 1e-3 && a.norm() < 1e3);
        let p1 = Form1Problem::new(a).unwrap();
        let rs = all_roots_form1(&p1, 1e-10).unwrap();
        prop_assert!(rs.sum().norm() < 1e-9);
        prop_assert!((rs.product() + a).norm() <= 1e-9 * a.norm().max(1.0));
        // Sum of pairwise products vanishes (no cubic term).
        let vals = rs.values();
        let mut e2 = Complex64::new(0.0, 0.0);
        for i in 0..5 {
            for j in i + 1..5 {
                e2 += vals[i] * vals[j];
            }
        }
        prop_assert!(e2.norm() < 1e-9, "e2 = {e2}");
    }

    /// The oracle's own roots pass residual and coefficient checks.
    #[test]
    fn oracle_self_consistency(a in nonzero_complex()) {
        prop_assume!(a.norm() > 1e-4 && a.norm() < 1e4);
        let q = QuinticCoefficients::form1(a);
        let roots = oracle_roots(&q).unwrap();
        prop_assert!(vieta_check(&q, &roots, 1e-10).all_pass());
    }
}

#[test]
fn trace_errors_present_iff_reference() {
    let p = Form3Problem::new(2.0, 0.1).unwrap();
    let (est, trace) = solve_form3(&p, 1e-12, 25).unwrap();
    assert!(trace.reference.is_none());
    assert!(trace.abs_errors.is_empty() && trace.rel_errors.is_empty());
    let trace = trace.with_reference(est.value);
    assert_eq!(trace.abs_errors.len(), trace.iterates.len());
    assert_eq!(trace.rel_errors.len(), trace.iterates.len());
}
