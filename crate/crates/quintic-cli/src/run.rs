//! Request execution: dispatch to the solvers and assemble reports.

use num_complex::Complex64;
use std::time::Instant;

use quintic::oracle::{oracle_roots, QuinticCoefficients};
use quintic::{
    all_roots_form1, all_roots_form2, all_roots_form3, bring_jerrard_to_form1, form1_to_form2,
    form2_to_form3, radical_formula, solve_form1, solve_form2, solve_form3, BringJerrardProblem,
    BringJerrardReduction, Error, Form1Problem, Form2Problem, Form3Problem, IterationTrace,
    RootEstimate, RootProvenance, RootSet,
};

use crate::report::{
    FormKind, FormulaOut, Method, OracleOut, ReductionEcho, RootOut, SolveReport, SolveRequest,
};

/// Which exit code a failure maps to: usage (2) or solver (3).
#[derive(Debug)]
pub enum RunError {
    Usage(String),
    /// Solver failure; carries whatever partial report could be built.
    Solver(String, Box<SolveReport>),
}

pub struct RunOutcome {
    pub report: SolveReport,
    pub echo: Option<ReductionEcho>,
    /// The radical iterates, for text rendering under method radical/both.
    pub trace: Option<IterationTrace>,
}

pub fn execute(request: &SolveRequest) -> Result<RunOutcome, RunError> {
    let started = Instant::now();
    let tol = request.tol.unwrap_or(quintic::DEFAULT_TOL);
    let max_iter = request.max_iter.unwrap_or(quintic::DEFAULT_MAX_ITER);
    if tol.is_nan() || tol < 1e-15 {
        return Err(RunError::Usage("tol must be >= 1e-15".into()));
    }

    let mut report = SolveReport {
        request: request.clone(),
        roots: Vec::new(),
        formula_root: None,
        oracle: None,
        timing_ms: 0.0,
    };

    let usage = |m: String| RunError::Usage(m);

    let outcome = match request.form {
        FormKind::Form1 => {
            let a: Complex64 = request
                .a
                .ok_or_else(|| usage("form1 requires --a".into()))?
                .into();
            let p = Form1Problem::new(a).map_err(|e| usage(e.to_string()))?;
            solve_generic(
                request,
                &mut report,
                QuinticCoefficients::form1(a),
                || all_roots_form1(&p, tol),
                || solve_form1(&p, tol, max_iter),
                || {
                    let p3 = form2_to_form3(&form1_to_form2(&p));
                    let y1 = radical_formula(&p3);
                    let z1 = if p3.conjugated {
                        (y1 / p3.u).conj()
                    } else {
                        y1 / p3.u
                    };
                    a / z1
                },
                Some(echo_for_form1(&p)),
            )
        }
        FormKind::Form2 => {
            let lambda: Complex64 = request
                .lambda
                .ok_or_else(|| usage("form2 requires --lambda".into()))?
                .into();
            let p = Form2Problem::new(lambda).map_err(|e| usage(e.to_string()))?;
            let p3 = form2_to_form3(&p);
            solve_generic(
                request,
                &mut report,
                QuinticCoefficients::form2(lambda),
                || all_roots_form2(&p, tol),
                || solve_form2(&p, tol, max_iter),
                || {
                    let y1 = radical_formula(&p3);
                    if p3.conjugated {
                        (y1 / p3.u).conj()
                    } else {
                        y1 / p3.u
                    }
                },
                Some(ReductionEcho {
                    xi: p3.xi,
                    theta: p3.theta,
                    conjugated: p3.conjugated,
                }),
            )
        }
        FormKind::Form3 => {
            let xi = request
                .xi
                .ok_or_else(|| usage("form3 requires --xi".into()))?;
            let theta = request
                .theta
                .ok_or_else(|| usage("form3 requires --theta".into()))?;
            let p = Form3Problem::new(xi, theta).map_err(|e| usage(e.to_string()))?;
            solve_generic(
                request,
                &mut report,
                QuinticCoefficients::form3(&p),
                || all_roots_form3(&p, tol),
                || solve_form3(&p, tol, max_iter),
                || radical_formula(&p),
                None,
            )
        }
        FormKind::BringJerrard => {
            let d1: Complex64 = request
                .d1
                .ok_or_else(|| usage("bring-jerrard requires --d1".into()))?
                .into();
            let d0: Complex64 = request
                .d0
                .ok_or_else(|| usage("bring-jerrard requires --d0".into()))?
                .into();
            solve_bring_jerrard(request, &mut report, tol, max_iter, d1, d0)
        }
    };

    match outcome {
        Ok((echo, trace)) => {
            report.timing_ms = started.elapsed().as_secs_f64() * 1e3;
            Ok(RunOutcome {
                report,
                echo,
                trace,
            })
        }
        Err(e) => {
            report.timing_ms = started.elapsed().as_secs_f64() * 1e3;
            Err(match e {
                EngineError::Usage(m) => RunError::Usage(m),
                EngineError::Solver(m) => RunError::Solver(m, Box::new(report)),
            })
        }
    }
}

enum EngineError {
    Usage(String),
    Solver(String),
}

impl From<Error> for EngineError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidCoefficient(_) | Error::OutOfRange(_) => {
                EngineError::Usage(e.to_string())
            }
            other => EngineError::Solver(other.to_string()),
        }
    }
}

fn echo_for_form1(p: &Form1Problem) -> ReductionEcho {
    let p3 = form2_to_form3(&form1_to_form2(p));
    ReductionEcho {
        xi: p3.xi,
        theta: p3.theta,
        conjugated: p3.conjugated,
    }
}

fn root_out_from_set(rs: &RootSet) -> Vec<RootOut> {
    rs.roots
        .iter()
        .map(|r| RootOut {
            re: r.value.re,
            im: r.value.im,
            residual: r.residual,
            method: match r.via {
                RootProvenance::Bisection => "trig".into(),
                RootProvenance::Vieta => "trig-vieta".into(),
            },
            k: Some(r.k),
            iterations: 0,
            certified_bound: None,
        })
        .collect()
}

fn root_out_from_estimate(est: &RootEstimate) -> RootOut {
    RootOut {
        re: est.value.re,
        im: est.value.im,
        residual: est.residual,
        method: "radical".into(),
        k: Some(0),
        iterations: est.iterations,
        certified_bound: Some(est.certified_abs_bound),
    }
}

fn solve_generic(
    request: &SolveRequest,
    report: &mut SolveReport,
    oracle_poly: QuinticCoefficients,
    trig: impl Fn() -> quintic::Result<RootSet>,
    radical: impl Fn() -> quintic::Result<(RootEstimate, IterationTrace)>,
    formula: impl Fn() -> Complex64,
    echo: Option<ReductionEcho>,
) -> Result<(Option<ReductionEcho>, Option<IterationTrace>), EngineError> {
    let mut trace = None;

    match request.method {
        Method::Trig => {
            let rs = trig().map_err(EngineError::from)?;
            report.roots = root_out_from_set(&rs);
        }
        Method::Radical => {
            let (est, tr) = radical().map_err(EngineError::from)?;
            report.roots = vec![root_out_from_estimate(&est)];
            let y1 = formula();
            report.formula_root = Some(formula_out(y1, est.value));
            trace = Some(tr.with_reference(est.value));
        }
        Method::Both => {
            let rs = trig().map_err(EngineError::from)?;
            report.roots = root_out_from_set(&rs);
            let (est, tr) = radical().map_err(EngineError::from)?;
            let y1 = formula();
            report.formula_root = Some(formula_out(y1, est.value));
            trace = Some(tr.with_reference(est.value));
        }
    }

    if request.verify {
        report.oracle = Some(oracle_compare(&oracle_poly, &report.roots)?);
    }
    Ok((echo, trace))
}

fn solve_bring_jerrard(
    request: &SolveRequest,
    report: &mut SolveReport,
    tol: f64,
    max_iter: usize,
    d1: Complex64,
    d0: Complex64,
) -> Result<(Option<ReductionEcho>, Option<IterationTrace>), EngineError> {
    if !d1.is_finite() || !d0.is_finite() {
        return Err(EngineError::Usage("coefficients must be finite".into()));
    }
    let bj = BringJerrardProblem { d1, d0 };
    let bj_residual = |v: Complex64| {
        let v2 = v * v;
        let val = (v2 * v2 * v + d1 * v + d0).norm();
        val / v
            .norm()
            .powi(5)
            .max((d1 * v).norm())
            .max(d0.norm())
            .max(1.0)
    };
    match bring_jerrard_to_form1(&bj) {
        BringJerrardReduction::Direct(roots) => {
            report.roots = roots
                .iter()
                .map(|&v| RootOut {
                    re: v.re,
                    im: v.im,
                    residual: bj_residual(v),
                    method: "direct".into(),
                    k: None,
                    iterations: 0,
                    certified_bound: None,
                })
                .collect();
            if request.verify {
                let q = QuinticCoefficients::bring_jerrard(d1, d0);
                report.oracle = Some(oracle_compare(&q, &report.roots)?);
            }
            Ok((None, None))
        }
        BringJerrardReduction::Reduced { problem, scale } => {
            let mut trace = None;
            match request.method {
                Method::Trig | Method::Both => {
                    let rs = all_roots_form1(&problem, tol).map_err(EngineError::from)?;
                    report.roots = rs
                        .roots
                        .iter()
                        .map(|r| {
                            let v = scale * r.value;
                            RootOut {
                                re: v.re,
                                im: v.im,
                                residual: bj_residual(v),
                                method: match r.via {
                                    RootProvenance::Bisection => "trig".into(),
                                    RootProvenance::Vieta => "trig-vieta".into(),
                                },
                                k: Some(r.k),
                                iterations: 0,
                                certified_bound: None,
                            }
                        })
                        .collect();
                }
                Method::Radical => {}
            }
            if matches!(request.method, Method::Radical | Method::Both) {
                let (est, tr) = solve_form1(&problem, tol, max_iter).map_err(EngineError::from)?;
                let v = scale * est.value;
                let est_out = RootOut {
                    re: v.re,
                    im: v.im,
                    residual: bj_residual(v),
                    method: "radical".into(),
                    k: Some(0),
                    iterations: est.iterations,
                    certified_bound: Some(est.certified_abs_bound),
                };
                if matches!(request.method, Method::Radical) {
                    report.roots = vec![est_out];
                }
                let p3 = form2_to_form3(&form1_to_form2(&problem));
                let y1 = radical_formula(&p3);
                let z1 = if p3.conjugated {
                    (y1 / p3.u).conj()
                } else {
                    y1 / p3.u
                };
                let v1 = scale * (problem.a / z1);
                report.formula_root = Some(formula_out(v1, v));
                trace = Some(
                    IterationTrace::new(tr.iterates.iter().map(|&x| scale * x).collect())
                        .with_reference(v),
                );
            }
            if request.verify {
                let q = QuinticCoefficients::bring_jerrard(d1, d0);
                report.oracle = Some(oracle_compare(&q, &report.roots)?);
            }
            let echo = echo_for_form1(&problem);
            Ok((Some(echo), trace))
        }
    }
}

fn formula_out(value: Complex64, converged: Complex64) -> FormulaOut {
    let abs_err = (value - converged).norm();
    let rel_err = if converged == Complex64::new(0.0, 0.0) {
        abs_err
    } else {
        (value / converged - Complex64::new(1.0, 0.0)).norm()
    };
    FormulaOut {
        re: value.re,
        im: value.im,
        abs_err,
        rel_err,
    }
}

fn oracle_compare(q: &QuinticCoefficients, roots: &[RootOut]) -> Result<OracleOut, EngineError> {
    let reference = oracle_roots(q).map_err(EngineError::from)?;
    let mut remaining: Vec<Complex64> = reference.to_vec();
    let mut max_distance = 0.0f64;
    let mut scale = 1.0f64;
    for r in roots {
        let z = Complex64::new(r.re, r.im);
        scale = scale.max(z.norm());
        let (j, d) = remaining
            .iter()
            .enumerate()
            .map(|(j, c)| (j, (z - c).norm()))
            .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .unwrap();
        max_distance = max_distance.max(d);
        if remaining.len() > 1 {
            remaining.remove(j);
        }
    }
    Ok(OracleOut {
        matched: max_distance <= 1e-8 * scale,
        max_distance,
    })
}
