//! Grid sweeps checking the proven bounds against the oracle.

use num_complex::Complex64;
use serde::Serialize;

use quintic::oracle::{oracle_roots, QuinticCoefficients};
use quintic::{radical_formula, solve_form1, solve_form3, Form1Problem, Form3Problem, CONSTANTS};

/// Solving tolerance for the sweeps: deep enough to expose several
/// contraction steps, shallow enough that every recorded error stays far
/// above f64 round-off at any root magnitude on the grid.
const SWEEP_TOL: f64 = 1e-8;
/// Per-step error ratios are measured only above this error.
const ERROR_FLOOR: f64 = 1e-13;

#[derive(Debug, Clone, Serialize)]
pub struct BoundCheck {
    pub family: String,
    pub observed: f64,
    pub bound: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub checks: Vec<BoundCheck>,
    pub grid_points: usize,
    pub contraction_steps: usize,
}

impl BoundsReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub struct GridSpec {
    pub xi_min: f64,
    pub xi_max: f64,
    pub xi_points: usize,
    pub theta_min: f64,
    pub theta_max: f64,
    pub theta_points: usize,
    pub a_mod_min: f64,
    pub a_mod_max: f64,
    pub a_mod_points: usize,
    pub a_args: usize,
}

fn log_spaced(min: f64, max: f64, points: usize) -> Vec<f64> {
    if points <= 1 {
        return vec![min];
    }
    (0..points)
        .map(|i| {
            let t = i as f64 / (points - 1) as f64;
            10f64.powf(min.log10() + t * (max.log10() - min.log10()))
        })
        .collect()
}

fn lin_spaced(min: f64, max: f64, points: usize) -> Vec<f64> {
    if points <= 1 {
        return vec![min];
    }
    (0..points)
        .map(|i| min + (max - min) * i as f64 / (points - 1) as f64)
        .collect()
}

fn oracle_root_near_axis(p: &Form3Problem, hint: Complex64) -> Result<Complex64, quintic::Error> {
    let roots = oracle_roots(&QuinticCoefficients::form3(p))?;
    Ok(roots
        .iter()
        .copied()
        .filter(|y| (-p.theta / 4.0 - 1e-9..=1e-9).contains(&y.arg()))
        .min_by(|a, b| a.arg().abs().partial_cmp(&b.arg().abs()).unwrap())
        .unwrap_or_else(|| {
            roots
                .iter()
                .copied()
                .min_by(|a, b| (a - hint).norm().partial_cmp(&(b - hint).norm()).unwrap())
                .unwrap()
        }))
}

pub fn run(spec: &GridSpec) -> Result<BoundsReport, quintic::Error> {
    let mut grid_points = 0usize;
    let mut contraction_steps = 0usize;

    // Rotated-problem families.
    let mut max_abs = 0.0f64;
    let mut max_rel = 0.0f64;
    let mut max_ratio = 0.0f64;
    for &xi in &log_spaced(spec.xi_min, spec.xi_max, spec.xi_points) {
        for &theta in &lin_spaced(spec.theta_min, spec.theta_max, spec.theta_points) {
            grid_points += 1;
            let p = Form3Problem::new(xi, theta)?;
            let y1 = radical_formula(&p);
            let ystar = oracle_root_near_axis(&p, y1)?;
            max_abs = max_abs.max((y1 - ystar).norm());
            max_rel = max_rel.max((y1 / ystar - Complex64::new(1.0, 0.0)).norm());
            let (_, tr) = solve_form3(&p, SWEEP_TOL, 25)?;
            for k in 1..tr.iterates.len().saturating_sub(1) {
                let ek = (tr.iterates[k] - ystar).norm();
                let ek1 = (tr.iterates[k + 1] - ystar).norm();
                if ek > ERROR_FLOOR {
                    contraction_steps += 1;
                    max_ratio = max_ratio.max(ek1 / ek);
                }
            }
        }
    }

    // Trinomial-problem families.
    let mut max_abs1 = 0.0f64;
    let mut max_rel1 = 0.0f64;
    let mut max_ratio1 = 0.0f64;
    for &modulus in &log_spaced(spec.a_mod_min, spec.a_mod_max, spec.a_mod_points) {
        for j in 0..spec.a_args.max(1) {
            grid_points += 1;
            let arg = 2.0 * std::f64::consts::PI * j as f64 / spec.a_args.max(1) as f64;
            let a = Complex64::from_polar(modulus, arg);
            let p = Form1Problem::new(a)?;
            let (est, tr) = solve_form1(&p, SWEEP_TOL, 25)?;
            let roots = oracle_roots(&QuinticCoefficients::form1(a))?;
            let xstar = roots
                .iter()
                .copied()
                .min_by(|p, q| {
                    (p - est.value)
                        .norm()
                        .partial_cmp(&(q - est.value).norm())
                        .unwrap()
                })
                .unwrap();
            max_abs1 = max_abs1.max((tr.iterates[1] - xstar).norm());
            max_rel1 = max_rel1.max((tr.iterates[1] / xstar - Complex64::new(1.0, 0.0)).norm());
            for k in 1..tr.iterates.len().saturating_sub(1) {
                let ek = (tr.iterates[k] - xstar).norm();
                let ek1 = (tr.iterates[k + 1] - xstar).norm();
                if ek > ERROR_FLOOR {
                    contraction_steps += 1;
                    max_ratio1 = max_ratio1.max(ek1 / ek);
                }
            }
        }
    }

    let checks = vec![
        BoundCheck {
            family: "one-shot absolute error".into(),
            observed: max_abs,
            bound: CONSTANTS.abs_error,
            pass: max_abs < CONSTANTS.abs_error,
        },
        BoundCheck {
            family: "one-shot relative error".into(),
            observed: max_rel,
            bound: CONSTANTS.rel_error,
            pass: max_rel < CONSTANTS.rel_error,
        },
        BoundCheck {
            family: "per-step contraction".into(),
            observed: max_ratio,
            bound: 1.0 / CONSTANTS.contraction,
            pass: max_ratio < 1.0 / CONSTANTS.contraction,
        },
        BoundCheck {
            family: "trinomial one-shot absolute error".into(),
            observed: max_abs1,
            bound: CONSTANTS.form1_abs_error,
            pass: max_abs1 < CONSTANTS.form1_abs_error,
        },
        BoundCheck {
            family: "trinomial one-shot relative error".into(),
            observed: max_rel1,
            bound: CONSTANTS.form1_rel_error,
            pass: max_rel1 < CONSTANTS.form1_rel_error,
        },
        BoundCheck {
            family: "trinomial per-step contraction".into(),
            observed: max_ratio1,
            bound: 1.0 / CONSTANTS.form1_contraction,
            pass: max_ratio1 < 1.0 / CONSTANTS.form1_contraction,
        },
    ];

    Ok(BoundsReport {
        checks,
        grid_points,
        contraction_steps,
    })
}

pub fn render_text(report: &BoundsReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "bound verification over {} grid points ({} contraction steps)\n",
        report.grid_points, report.contraction_steps
    ));
    out.push_str("  family                                   observed        bound  status\n");
    for c in &report.checks {
        out.push_str(&format!(
            "  {:<38} {:>12.4e} {:>12.4e}  {}\n",
            c.family,
            c.observed,
            c.bound,
            if c.pass { "pass" } else { "FAIL" }
        ));
    }
    out
}

pub fn render_csv(report: &BoundsReport) -> String {
    let mut out = String::from("family,observed,bound,pass\n");
    for c in &report.checks {
        out.push_str(&format!(
            "{},{:e},{:e},{}\n",
            c.family, c.observed, c.bound, c.pass
        ));
    }
    out
}
