//! Command-line front end for the quintic trinomial solvers.
//!
//! Exit codes: 0 success, 1 partial batch failure, 2 usage/parse error,
//! 3 solver or bound failure.

mod batch;
mod bounds;
mod report;
mod run;

use clap::{Args, Parser, Subcommand};
use std::io::{Read, Write};
use std::process::ExitCode;

use quintic::naive_iteration;
use report::{format_complex, parse_complex, ComplexParam, FormKind, Method, SolveRequest};
use run::{execute, RunError};

#[derive(Parser)]
#[command(
    name = "quintic",
    version,
    about = "Solve quintic trinomials by radical iteration and trigonometric bisection"
)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Convergence tolerance (overrides env QUINTIC_TOL; default 1e-12).
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Iteration cap (overrides env QUINTIC_MAX_ITER; default 25).
    #[arg(long, global = true)]
    max_iter: Option<usize>,
    /// Worker threads for batch mode (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Cross-check reports against the independent oracle (for batch,
    /// forces the check on every line).
    #[arg(long, global = true)]
    verify: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one equation.
    Solve(SolveArgs),
    /// Process a JSONL stream of solve requests (file or stdin).
    Batch {
        /// Input file; reads stdin when omitted.
        file: Option<std::path::PathBuf>,
    },
    /// Show the divergent naive fifth-root iteration next to the
    /// converging one.
    DemoDivergence {
        #[arg(long, default_value_t = 0.01, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        x0: f64,
        #[arg(long, default_value_t = 14)]
        steps: usize,
    },
    /// Sweep parameter grids and check every proven bound.
    VerifyBounds(BoundsArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Equation shape the coefficients describe.
    #[arg(long, value_enum)]
    form: FormKind,
    /// Coefficient a for form1 (format: RE, RE+IMi or RE-IMi).
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    a: Option<num_complex::Complex64>,
    /// Coefficient lambda for form2.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    lambda: Option<num_complex::Complex64>,
    /// Target xi (> 0) for form3.
    #[arg(long)]
    xi: Option<f64>,
    /// Rotation angle theta in [0, pi/5] for form3.
    #[arg(long)]
    theta: Option<f64>,
    /// Linear coefficient d1 for bring-jerrard.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    d1: Option<num_complex::Complex64>,
    /// Constant d0 for bring-jerrard.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    d0: Option<num_complex::Complex64>,
    /// radical = one root with trace, trig = all five, both = all five
    /// plus the radical iteration.
    #[arg(long, value_enum, default_value_t = Method::Both)]
    method: Method,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long, default_value_t = 1e-9)]
    xi_min: f64,
    #[arg(long, default_value_t = 1e9)]
    xi_max: f64,
    #[arg(long, default_value_t = 40)]
    xi_points: usize,
    #[arg(long, default_value_t = 0.0)]
    theta_min: f64,
    #[arg(long, default_value_t = std::f64::consts::PI / 5.0)]
    theta_max: f64,
    #[arg(long, default_value_t = 20)]
    theta_points: usize,
    #[arg(long, default_value_t = 1e-4)]
    a_mod_min: f64,
    #[arg(long, default_value_t = 1e4)]
    a_mod_max: f64,
    #[arg(long, default_value_t = 20)]
    a_mod_points: usize,
    #[arg(long, default_value_t = 16)]
    a_args: usize,
}

fn env_f64(name: &str) -> Result<Option<f64>, String> {
    match std::env::var(name) {
        Ok(v) => v
            .parse::<f64>()
            .map(Some)
            .map_err(|e| format!("bad {name}={v:?}: {e}")),
        Err(_) => Ok(None),
    }
}

fn env_usize(name: &str) -> Result<Option<usize>, String> {
    match std::env::var(name) {
        Ok(v) => v
            .parse::<usize>()
            .map(Some)
            .map_err(|e| format!("bad {name}={v:?}: {e}")),
        Err(_) => Ok(None),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    // Precedence: flags, then environment, then defaults.
    let (env_tol, env_max_iter) = match (env_f64("QUINTIC_TOL"), env_usize("QUINTIC_MAX_ITER")) {
        (Ok(t), Ok(m)) => (t, m),
        (Err(e), _) | (_, Err(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let tol = cli.tol.or(env_tol).unwrap_or(quintic::DEFAULT_TOL);
    let max_iter = cli
        .max_iter
        .or(env_max_iter)
        .unwrap_or(quintic::DEFAULT_MAX_ITER);
    let jobs = cli.jobs.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    });

    match cli.command {
        Command::Solve(args) => cmd_solve(args, cli.format, tol, max_iter, cli.verify),
        Command::Batch { file } => cmd_batch(file, tol, max_iter, jobs, cli.verify),
        Command::DemoDivergence { a, x0, steps } => {
            cmd_demo(a, x0, steps, cli.format, tol, max_iter)
        }
        Command::VerifyBounds(args) => cmd_verify_bounds(args, cli.format),
    }
}

fn cmd_solve(args: SolveArgs, format: Format, tol: f64, max_iter: usize, verify: bool) -> ExitCode {
    let request = SolveRequest {
        form: args.form,
        a: args.a.map(ComplexParam::from),
        lambda: args.lambda.map(ComplexParam::from),
        xi: args.xi,
        theta: args.theta,
        d1: args.d1.map(ComplexParam::from),
        d0: args.d0.map(ComplexParam::from),
        method: args.method,
        tol: Some(tol),
        max_iter: Some(max_iter),
        verify,
    };
    match execute(&request) {
        Ok(outcome) => {
            print_report(&outcome, format);
            ExitCode::SUCCESS
        }
        Err(RunError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(RunError::Solver(m, partial)) => {
            eprintln!("solver error: {m}");
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string(&*partial).expect("report serializes")
                ),
                Format::Text => print!("{}", report::render_text(&partial, None)),
                Format::Csv => print!("{}", report::render_csv(&partial)),
            }
            ExitCode::from(3)
        }
    }
}

fn print_report(outcome: &run::RunOutcome, format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string(&outcome.report).expect("report serializes")
        ),
        Format::Csv => print!("{}", report::render_csv(&outcome.report)),
        Format::Text => {
            print!(
                "{}",
                report::render_text(&outcome.report, outcome.echo.as_ref())
            );
            if let Some(trace) = &outcome.trace {
                println!("radical iteration (reference = converged root):");
                println!("    iter                           value      |err|       rel");
                for (k, y) in trace.iterates.iter().enumerate() {
                    println!(
                        "  {:>6}  {:>30}  {:>9.2e}  {:>8.2e}",
                        k,
                        format_complex(*y, 10),
                        trace.abs_errors[k],
                        trace.rel_errors[k],
                    );
                }
            }
        }
    }
}

fn cmd_batch(
    file: Option<std::path::PathBuf>,
    tol: f64,
    max_iter: usize,
    jobs: usize,
    verify: bool,
) -> ExitCode {
    let lines: Vec<String> = match file {
        Some(path) => match std::fs::read_to_string(&path) {
            Ok(s) => s.lines().map(str::to_owned).collect(),
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => {
            let mut buf = String::new();
            if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
                eprintln!("error: cannot read stdin: {e}");
                return ExitCode::from(2);
            }
            buf.lines().map(str::to_owned).collect()
        }
    };

    let outcomes = batch::process(&lines, tol, max_iter, jobs, verify);
    let stdout = std::io::stdout();
    let mut handle = stdout.lock();
    let mut any_failed = false;
    for o in &outcomes {
        any_failed |= !o.ok;
        writeln!(handle, "{}", o.output).expect("stdout writable");
    }
    drop(handle);
    if any_failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_demo(a: f64, x0: f64, steps: usize, format: Format, tol: f64, max_iter: usize) -> ExitCode {
    if steps == 0 {
        eprintln!("error: steps must be >= 1");
        return ExitCode::from(2);
    }
    let naive = naive_iteration(a, x0, steps);
    let proposed = if a == 0.0 {
        Vec::new()
    } else {
        let p = match quintic::Form1Problem::new(num_complex::Complex64::new(a, 0.0)) {
            Ok(p) => p,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        };
        match quintic::solve_form1(&p, tol, max_iter) {
            Ok((_, tr)) => tr.iterates,
            Err(quintic::Error::MaxIterExceeded { trace, .. }) => trace.iterates,
            Err(e) => {
                eprintln!("solver error: {e}");
                return ExitCode::from(3);
            }
        }
    };

    match format {
        Format::Json => {
            let value = serde_json::json!({
                "a": a,
                "x0": x0,
                "steps": steps,
                "naive": naive.iterates.iter().map(|x| x.re).collect::<Vec<_>>(),
                "proposed": proposed
                    .iter()
                    .map(|z| serde_json::json!({"re": z.re, "im": z.im}))
                    .collect::<Vec<_>>(),
            });
            println!("{value}");
        }
        Format::Csv => {
            println!("step,naive,proposed_re,proposed_im");
            for k in 0..naive.iterates.len().max(proposed.len()) {
                let n = naive
                    .iterates
                    .get(k)
                    .map(|x| format!("{:e}", x.re))
                    .unwrap_or_default();
                let p = proposed
                    .get(k)
                    .map(|z| format!("{:e},{:e}", z.re, z.im))
                    .unwrap_or_else(|| ",".into());
                println!("{k},{n},{p}");
            }
        }
        Format::Text => {
            println!("naive x_(k+1) = -(a + x_k)^(1/5) next to the convergent iteration, a = {a}");
            println!("    step                naive                        proposed");
            for k in 0..naive.iterates.len().max(proposed.len()) {
                let n = naive
                    .iterates
                    .get(k)
                    .map(|x| format!("{:+.10}", x.re))
                    .unwrap_or_default();
                let p = proposed
                    .get(k)
                    .map(|z| format_complex(*z, 10))
                    .unwrap_or_else(|| "(converged)".into());
                println!("  {k:>6}  {n:>19}  {p:>30}");
            }
        }
    }
    ExitCode::SUCCESS
}

fn cmd_verify_bounds(args: BoundsArgs, format: Format) -> ExitCode {
    let spec = bounds::GridSpec {
        xi_min: args.xi_min,
        xi_max: args.xi_max,
        xi_points: args.xi_points,
        theta_min: args.theta_min,
        theta_max: args.theta_max,
        theta_points: args.theta_points,
        a_mod_min: args.a_mod_min,
        a_mod_max: args.a_mod_max,
        a_mod_points: args.a_mod_points,
        a_args: args.a_args,
    };
    let report = match bounds::run(&spec) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("solver error: {e}");
            return ExitCode::from(3);
        }
    };
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string(&report).expect("report serializes")
        ),
        Format::Text => print!("{}", bounds::render_text(&report)),
        Format::Csv => print!("{}", bounds::render_csv(&report)),
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    }
}
