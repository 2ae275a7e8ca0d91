//! Report structures and rendering for both output modes.
//!
//! Text mode prints stable `key: value` lines; JSON mode serializes the
//! same values with `{re, im}` objects for every complex number. Field
//! names and canonical root ordering are part of the CLI contract.

use serde::{Deserialize, Serialize};
use sextic::{Complex64, SexticSolution};

#[derive(Clone, Copy, Serialize, Deserialize)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexJson {
    fn from(z: Complex64) -> Self {
        // +0.0 folds negative zero into positive zero.
        ComplexJson {
            re: z.re + 0.0,
            im: z.im + 0.0,
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct ParamsJson {
    pub a: ComplexJson,
    pub b: ComplexJson,
    pub c: ComplexJson,
    pub d: ComplexJson,
}

/// Report for `solve`, `check` and `resolvent`; sections not computed by
/// the command (or unavailable on failure) are omitted.
#[derive(Serialize, Deserialize)]
pub struct SexticReport {
    pub input: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsJson>,
    /// Resolvent coefficients below the monic leading term, descending
    /// (x⁴ through the constant; the x⁴ entry is structurally zero).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resolvent: Option<Vec<ComplexJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quad_roots: Option<Vec<ComplexJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cubic_roots: Option<Vec<ComplexJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<ComplexJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_max: Option<f64>,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl SexticReport {
    pub fn bare(input: Vec<f64>, status: &str) -> Self {
        SexticReport {
            input,
            params: None,
            resolvent: None,
            quad_roots: None,
            cubic_roots: None,
            roots: None,
            residual_max: None,
            status: status.to_string(),
            error: None,
        }
    }

    pub fn failure(input: Vec<f64>, status: &str, error: String) -> Self {
        SexticReport {
            error: Some(error),
            ..SexticReport::bare(input, status)
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct SplitReport {
    pub input: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair_sum: Option<ComplexJson>,
    /// Quadratic factor coefficients, descending, leading 1 included.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quadratic: Option<Vec<ComplexJson>>,
    /// Cubic factor coefficients, descending, leading 1 included.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cubic: Option<Vec<ComplexJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub product_residual: Option<f64>,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Serialize, Deserialize)]
pub struct MartinelliReport {
    pub input: Vec<f64>,
    pub ascending: Vec<ComplexJson>,
    pub descending: Vec<ComplexJson>,
    pub status: String,
}

/// One signed real component; values that round to zero at the requested
/// precision lose their sign so golden files stay stable.
fn fmt_part(value: f64, precision: usize) -> (char, String) {
    let digits = format!("{:.precision$}", value.abs());
    let rounds_to_zero = digits.chars().all(|c| c == '0' || c == '.');
    let sign = if value < 0.0 && !rounds_to_zero { '-' } else { '+' };
    (sign, digits)
}

/// `re±im·i` with the minus sign attached and no spaces.
pub fn fmt_complex(z: Complex64, precision: usize) -> String {
    let (re_sign, re_digits) = fmt_part(z.re, precision);
    let (im_sign, im_digits) = fmt_part(z.im, precision);
    let re_prefix = if re_sign == '-' { "-" } else { "" };
    format!("{re_prefix}{re_digits}{im_sign}{im_digits}i")
}

pub fn fmt_complex_list(values: &[Complex64], precision: usize) -> String {
    values
        .iter()
        .map(|&z| fmt_complex(z, precision))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn fmt_residual(value: f64, precision: usize) -> String {
    format!("{value:.precision$e}")
}


/// All six resolvent coefficients descending, monic leading term included
/// (the text form mirrors how the quintic is written).
pub fn resolvent_descending(q: &sextic::QuinticDepressed) -> [Complex64; 6] {
    [
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        q.c3,
        q.c2,
        q.c1,
        q.c0,
    ]
}

/// The five non-leading resolvent coefficients for the JSON schema.
pub fn resolvent_json(q: &sextic::QuinticDepressed) -> Vec<ComplexJson> {
    resolvent_descending(q)[1..].iter().map(|&z| z.into()).collect()
}

pub fn params_json(params: &sextic::MilanezParams) -> ParamsJson {
    ParamsJson {
        a: params.a.into(),
        b: params.b.into(),
        c: params.c.into(),
        d: params.d.into(),
    }
}

pub fn solution_report(input: Vec<f64>, solution: &SexticSolution) -> SexticReport {
    SexticReport {
        input,
        params: Some(params_json(&solution.params)),
        resolvent: Some(resolvent_json(&solution.resolvent)),
        quad_roots: Some(solution.quad_roots.iter().map(|&z| z.into()).collect()),
        cubic_roots: Some(solution.cubic_roots.iter().map(|&z| z.into()).collect()),
        roots: Some(solution.roots.iter().map(|&z| z.into()).collect()),
        residual_max: Some(solution.residual_max),
        status: "ok".to_string(),
        error: None,
    }
}

pub fn print_json<T: Serialize>(report: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(report).expect("report serialization cannot fail")
    );
}
