//! JSONL batch processing: one request per line, reports in input order,
//! lines fanned out over a bounded worker pool.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

use crate::report::SolveRequest;
use crate::run::{execute, RunError};

pub struct LineOutcome {
    pub output: String,
    pub ok: bool,
}

/// Process every line; blank lines are skipped. Errors produce an error
/// object on that line and processing continues.
pub fn process(
    lines: &[String],
    default_tol: f64,
    default_max_iter: usize,
    jobs: usize,
    force_verify: bool,
) -> Vec<LineOutcome> {
    let work: Vec<(usize, &String)> = lines
        .iter()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .collect();
    let slots: Vec<OnceLock<LineOutcome>> = (0..work.len()).map(|_| OnceLock::new()).collect();
    let next = AtomicUsize::new(0);
    let workers = jobs.max(1).min(work.len().max(1));

    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= work.len() {
                    break;
                }
                let outcome = process_line(work[i].1, default_tol, default_max_iter, force_verify);
                let _ = slots[i].set(outcome);
            });
        }
    });

    slots
        .into_iter()
        .map(|s| s.into_inner().expect("worker filled every slot"))
        .collect()
}

fn process_line(
    line: &str,
    default_tol: f64,
    default_max_iter: usize,
    force_verify: bool,
) -> LineOutcome {
    let mut request: SolveRequest = match serde_json::from_str(line) {
        Ok(r) => r,
        Err(e) => {
            return LineOutcome {
                output: error_object(&format!("malformed request: {e}")),
                ok: false,
            }
        }
    };
    request.tol = request.tol.or(Some(default_tol));
    request.max_iter = request.max_iter.or(Some(default_max_iter));
    request.verify |= force_verify;
    match execute(&request) {
        Ok(outcome) => LineOutcome {
            output: serde_json::to_string(&outcome.report).expect("report serializes"),
            ok: true,
        },
        Err(RunError::Usage(m)) => LineOutcome {
            output: error_object(&m),
            ok: false,
        },
        Err(RunError::Solver(m, report)) => {
            let mut value = serde_json::to_value(&*report).expect("report serializes");
            value
                .as_object_mut()
                .expect("report is an object")
                .insert("error".into(), serde_json::Value::String(m));
            LineOutcome {
                output: serde_json::to_string(&value).expect("value serializes"),
                ok: false,
            }
        }
    }
}

fn error_object(message: &str) -> String {
    serde_json::to_string(&serde_json::json!({ "error": message })).expect("error serializes")
}
