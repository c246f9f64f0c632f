//! Request/report types, the complex-number text format, and rendering.
//!
//! Complex numbers are written `RE`, `RE+IMi` or `RE-IMi` (no spaces,
//! scientific notation allowed) in flags and text output, and as
//! `{"re": .., "im": ..}` objects in JSON. Text tables print 10 decimals.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum FormKind {
    BringJerrard,
    Form1,
    Form2,
    Form3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Radical,
    Trig,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexParam {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexParam {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<ComplexParam> for Complex64 {
    fn from(p: ComplexParam) -> Self {
        Complex64::new(p.re, p.im)
    }
}

/// One solve request; also the JSONL batch line schema.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolveRequest {
    pub form: FormKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<ComplexParam>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<ComplexParam>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d1: Option<ComplexParam>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d0: Option<ComplexParam>,
    #[serde(default = "default_method")]
    pub method: Method,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_iter: Option<usize>,
    #[serde(default)]
    pub verify: bool,
}

fn default_method() -> Method {
    Method::Both
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootOut {
    pub re: f64,
    pub im: f64,
    pub residual: f64,
    pub method: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i32>,
    pub iterations: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certified_bound: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FormulaOut {
    pub re: f64,
    pub im: f64,
    pub abs_err: f64,
    pub rel_err: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OracleOut {
    pub matched: bool,
    pub max_distance: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolveReport {
    pub request: SolveRequest,
    pub roots: Vec<RootOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula_root: Option<FormulaOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleOut>,
    pub timing_ms: f64,
}

/// Reduction parameters echoed in text output.
#[derive(Debug, Clone, Copy)]
pub struct ReductionEcho {
    pub xi: f64,
    pub theta: f64,
    pub conjugated: bool,
}

/// Parse `RE`, `RE+IMi` or `RE-IMi` (pure imaginary must be written with
/// an explicit real part, e.g. `0+2i`).
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t = s.trim();
    if t.is_empty() {
        return Err("empty complex literal".into());
    }
    if !t.ends_with('i') {
        return t
            .parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|e| format!("bad real literal {t:?}: {e}"));
    }
    let body = &t[..t.len() - 1];
    let bytes = body.as_bytes();
    let mut split = None;
    for idx in (1..bytes.len()).rev() {
        let c = bytes[idx] as char;
        if (c == '+' || c == '-') && !matches!(bytes[idx - 1] as char, 'e' | 'E') {
            split = Some(idx);
            break;
        }
    }
    let Some(idx) = split else {
        return Err(format!(
            "bad complex literal {t:?}: expected RE+IMi or RE-IMi"
        ));
    };
    let re = body[..idx]
        .parse::<f64>()
        .map_err(|e| format!("bad real part in {t:?}: {e}"))?;
    let im_str = &body[idx..];
    let im = match im_str {
        "+" => 1.0,
        "-" => -1.0,
        _ => im_str
            .parse::<f64>()
            .map_err(|e| format!("bad imaginary part in {t:?}: {e}"))?,
    };
    Ok(Complex64::new(re, im))
}

/// `RE+IMi` / `RE-IMi` with 10 decimals, mirroring the text-table style.
pub fn format_complex(z: Complex64, decimals: usize) -> String {
    format!("{:.dec$}{:+.dec$}i", z.re, z.im, dec = decimals)
}

pub fn render_text(report: &SolveReport, echo: Option<&ReductionEcho>) -> String {
    let mut out = String::new();
    let req = &report.request;
    out.push_str(&format!("problem: {}", form_label(req)));
    out.push('\n');
    if let Some(e) = echo {
        out.push_str(&format!(
            "reduction: xi = {:.10e}  theta = {:.10}  conjugated = {}\n",
            e.xi, e.theta, e.conjugated
        ));
    }
    out.push_str("roots:\n");
    out.push_str("      k  method      iter                           value       residual\n");
    for r in &report.roots {
        out.push_str(&format!(
            "  {:>5}  {:<10}  {:>4}  {:>30}  {:>13.3e}\n",
            r.k.map(|k| k.to_string()).unwrap_or_else(|| "-".into()),
            r.method,
            r.iterations,
            format_complex(Complex64::new(r.re, r.im), 10),
            r.residual,
        ));
    }
    if let Some(f) = &report.formula_root {
        out.push_str(&format!(
            "formula root: {}  abs_err = {:.3e}  rel_err = {:.3e}\n",
            format_complex(Complex64::new(f.re, f.im), 10),
            f.abs_err,
            f.rel_err
        ));
    }
    if let Some(o) = &report.oracle {
        out.push_str(&format!(
            "oracle: matched = {}  max_distance = {:.3e}\n",
            o.matched, o.max_distance
        ));
    }
    out.push_str(&format!("timing_ms: {:.3}\n", report.timing_ms));
    out
}

pub fn render_csv(report: &SolveReport) -> String {
    let mut out = String::from("k,re,im,residual,method,iterations,certified_bound\n");
    for r in &report.roots {
        out.push_str(&format!(
            "{},{:e},{:e},{:e},{},{},{}\n",
            r.k.map(|k| k.to_string()).unwrap_or_default(),
            r.re,
            r.im,
            r.residual,
            r.method,
            r.iterations,
            r.certified_bound
                .map(|b| format!("{b:e}"))
                .unwrap_or_default(),
        ));
    }
    out
}

fn form_label(req: &SolveRequest) -> String {
    match req.form {
        FormKind::Form1 => format!(
            "x^5 + x + a = 0, a = {}",
            req.a
                .map(|c| format_complex(c.into(), 10))
                .unwrap_or_default()
        ),
        FormKind::Form2 => format!(
            "(z^5 + z^4)/2 = lambda, lambda = {}",
            req.lambda
                .map(|c| format_complex(c.into(), 10))
                .unwrap_or_default()
        ),
        FormKind::Form3 => format!(
            "(y^5 + u y^4)/2 = xi, xi = {:e}, theta = {}",
            req.xi.unwrap_or(f64::NAN),
            req.theta.unwrap_or(f64::NAN)
        ),
        FormKind::BringJerrard => format!(
            "v^5 + d1 v + d0 = 0, d1 = {}, d0 = {}",
            req.d1
                .map(|c| format_complex(c.into(), 10))
                .unwrap_or_default(),
            req.d0
                .map(|c| format_complex(c.into(), 10))
                .unwrap_or_default()
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_complex_forms() {
        assert_eq!(parse_complex("0.01").unwrap(), Complex64::new(0.01, 0.0));
        assert_eq!(parse_complex("-5e-9").unwrap(), Complex64::new(-5e-9, 0.0));
        assert_eq!(
            parse_complex("3.08+1.68i").unwrap(),
            Complex64::new(3.08, 1.68)
        );
        assert_eq!(
            parse_complex("1e-3-2.5e2i").unwrap(),
            Complex64::new(1e-3, -250.0)
        );
        assert_eq!(parse_complex("0+2i").unwrap(), Complex64::new(0.0, 2.0));
        assert_eq!(parse_complex("1-i").unwrap(), Complex64::new(1.0, -1.0));
        assert!(parse_complex("").is_err());
        assert!(parse_complex("2i").is_err());
        assert!(parse_complex("nonsense").is_err());
    }

    #[test]
    fn format_round_trips_text() {
        let z = Complex64::new(0.7095957339, -0.7071176748);
        assert_eq!(format_complex(z, 10), "0.7095957339-0.7071176748i");
        let back = parse_complex(&format_complex(z, 10)).unwrap();
        assert!((back - z).norm() < 1e-10);
    }
}
