//! `sextic` — solve sextic equations with a splittable quintic resolvent.
//!
//! Verbs: `solve`, `check`, `resolvent` (seven coefficients, descending),
//! `split`, `martinelli` (four depressed-quintic coefficients C D E F).
//! Exit codes: 0 success, 2 not solvable by this relation, 3 parse error,
//! 4 numerical failure.

mod report;

use clap::{Args, Parser, Subcommand};
use report::{MartinelliReport, SexticReport, SplitReport};
use sextic::martinelli::{self, QuinticDepressed};
use sextic::milanez::{self, SolveError};
use sextic::{Polynomial, SexticMonic, Tolerance};
use std::process::ExitCode;

const EXIT_NOT_SOLVABLE: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_NUMERICAL: u8 = 4;

#[derive(Parser)]
#[command(
    name = "sextic",
    version,
    about = "Closed-form solver for sextic equations with a splittable quintic resolvent"
)]
struct Cli {
    #[command(flatten)]
    config: ConfigArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ConfigArgs {
    /// Emit the report as JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Relative tolerance for coefficient comparisons.
    #[arg(long, global = true, default_value_t = 1e-8)]
    rtol: f64,
    /// Absolute tolerance floor for coefficient comparisons.
    #[arg(long, global = true, default_value_t = 1e-10)]
    atol: f64,
    /// Decimal digits in text output (1–17).
    #[arg(long, global = true, default_value_t = 10)]
    precision: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a sextic: seven coefficients, descending degree.
    Solve {
        #[arg(allow_hyphen_values = true, num_args = 0.., value_name = "COEFF")]
        coeffs: Vec<String>,
    },
    /// Recover the factor parameters (a, b, c, d) without solving.
    Check {
        #[arg(allow_hyphen_values = true, num_args = 0.., value_name = "COEFF")]
        coeffs: Vec<String>,
    },
    /// Print the quintic resolvent of a sextic.
    Resolvent {
        #[arg(allow_hyphen_values = true, num_args = 0.., value_name = "COEFF")]
        coeffs: Vec<String>,
    },
    /// Split a depressed quintic x⁵+Cx³+Dx²+Ex+F into quadratic × cubic.
    Split {
        #[arg(allow_hyphen_values = true, num_args = 0.., value_name = "C D E F")]
        coeffs: Vec<String>,
    },
    /// Print the degree-10 pair-sum polynomial of a depressed quintic.
    Martinelli {
        #[arg(allow_hyphen_values = true, num_args = 0.., value_name = "C D E F")]
        coeffs: Vec<String>,
    },
}

struct Config {
    json: bool,
    precision: usize,
    tol: Tolerance,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_PARSE,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };

    let args = &cli.config;
    if !(1..=17).contains(&args.precision) {
        eprintln!("precision must be between 1 and 17 (got {})", args.precision);
        return ExitCode::from(EXIT_PARSE);
    }
    if !(args.rtol > 0.0 && args.rtol.is_finite() && args.atol > 0.0 && args.atol.is_finite()) {
        eprintln!("rtol and atol must be positive finite numbers");
        return ExitCode::from(EXIT_PARSE);
    }
    let config = Config {
        json: args.json,
        precision: args.precision,
        tol: Tolerance::new(args.rtol, args.atol),
    };

    match cli.command {
        Command::Solve { coeffs } => cmd_solve(&coeffs, &config),
        Command::Check { coeffs } => cmd_check(&coeffs, &config),
        Command::Resolvent { coeffs } => cmd_resolvent(&coeffs, &config),
        Command::Split { coeffs } => cmd_split(&coeffs, &config),
        Command::Martinelli { coeffs } => cmd_martinelli(&coeffs, &config),
    }
}

/// Decimal or `p/q` rational token, converted to binary64.
fn parse_real(token: &str) -> Result<f64, String> {
    let value = if let Some((numer, denom)) = token.split_once('/') {
        let n: f64 = numer
            .parse()
            .map_err(|_| format!("invalid number {numer:?} in {token:?}"))?;
        let d: f64 = denom
            .parse()
            .map_err(|_| format!("invalid number {denom:?} in {token:?}"))?;
        if d == 0.0 {
            return Err(format!("zero denominator in {token:?}"));
        }
        n / d
    } else {
        token
            .parse()
            .map_err(|_| format!("invalid number {token:?}"))?
    };
    if !value.is_finite() {
        return Err(format!("non-finite coefficient {token:?}"));
    }
    Ok(value)
}

fn parse_reals(tokens: &[String], expected: usize, shape: &str) -> Result<Vec<f64>, String> {
    if tokens.len() != expected {
        return Err(format!(
            "expected {expected} coefficients ({shape}), got {}",
            tokens.len()
        ));
    }
    tokens.iter().map(|t| parse_real(t)).collect()
}

/// Seven descending sextic coefficients, leading nonzero, monicized.
fn parse_sextic(tokens: &[String]) -> Result<(Vec<f64>, SexticMonic), String> {
    let values = parse_reals(tokens, 7, "descending degree, x⁶ first")?;
    if values[0] == 0.0 {
        return Err("leading coefficient must be nonzero".to_string());
    }
    let poly = Polynomial::from_real_descending(&values);
    let sextic = SexticMonic::from_polynomial(&poly).expect("degree 6 by construction");
    Ok((values, sextic))
}

/// Four depressed-quintic coefficients C D E F (x⁵ implied monic).
fn parse_quintic(tokens: &[String]) -> Result<(Vec<f64>, QuinticDepressed), String> {
    let values = parse_reals(tokens, 4, "C D E F of x⁵+Cx³+Dx²+Ex+F")?;
    let quintic = QuinticDepressed::from_real(values[0], values[1], values[2], values[3]);
    Ok((values, quintic))
}

fn parse_failure(message: &str) -> ExitCode {
    eprintln!("parse error: {message}");
    ExitCode::from(EXIT_PARSE)
}

/// Emit a failure report on stdout (stderr carries the diagnostic) and
/// return the matching exit code.
fn sextic_failure(input: Vec<f64>, status: &str, error: String, code: u8, config: &Config) -> ExitCode {
    eprintln!("{error}");
    let report = SexticReport::failure(input, status, error);
    if config.json {
        report::print_json(&report);
    } else {
        println!("error: {}", report.error.as_deref().unwrap_or_default());
        println!("status: {status}");
    }
    ExitCode::from(code)
}

fn print_sextic_report_text(report: &SexticReport, config: &Config) {
    // Reconstruct display values from the JSON-shaped report so both modes
    // are guaranteed to report identical numbers.
    let p = config.precision;
    let as_complex = |v: &report::ComplexJson| sextic::Complex64::new(v.re, v.im);
    if let Some(params) = &report.params {
        println!(
            "params: a={} b={} c={} d={}",
            report::fmt_complex(as_complex(&params.a), p),
            report::fmt_complex(as_complex(&params.b), p),
            report::fmt_complex(as_complex(&params.c), p),
            report::fmt_complex(as_complex(&params.d), p),
        );
    }
    if let Some(resolvent) = &report.resolvent {
        let mut line = vec![report::fmt_complex(sextic::Complex64::new(1.0, 0.0), p)];
        line.extend(resolvent.iter().map(|v| report::fmt_complex(as_complex(v), p)));
        println!("resolvent: {}", line.join(" "));
    }
    for (label, values) in [
        ("quad_roots", &report.quad_roots),
        ("cubic_roots", &report.cubic_roots),
        ("roots", &report.roots),
    ] {
        if let Some(values) = values {
            let rendered: Vec<String> = values
                .iter()
                .map(|v| report::fmt_complex(as_complex(v), p))
                .collect();
            println!("{label}: {}", rendered.join(" "));
        }
    }
    if let Some(residual) = report.residual_max {
        println!("residual_max: {}", report::fmt_residual(residual, p));
    }
    println!("status: {}", report.status);
}

fn cmd_solve(tokens: &[String], config: &Config) -> ExitCode {
    let (input, sextic) = match parse_sextic(tokens) {
        Ok(parsed) => parsed,
        Err(msg) => return parse_failure(&msg),
    };
    match milanez::solve_sextic(&sextic, config.tol) {
        Ok(solution) => {
            let report = report::solution_report(input, &solution);
            if config.json {
                report::print_json(&report);
            } else {
                print_sextic_report_text(&report, config);
            }
            ExitCode::SUCCESS
        }
        Err(SolveError::NotSolvable) => sextic_failure(
            input,
            "not_solvable",
            "not Milanez-solvable".to_string(),
            EXIT_NOT_SOLVABLE,
            config,
        ),
        Err(err @ SolveError::ResidualExceeded { .. }) => sextic_failure(
            input,
            "numerical_failure",
            err.to_string(),
            EXIT_NUMERICAL,
            config,
        ),
    }
}

fn cmd_check(tokens: &[String], config: &Config) -> ExitCode {
    let (input, sextic) = match parse_sextic(tokens) {
        Ok(parsed) => parsed,
        Err(msg) => return parse_failure(&msg),
    };
    match milanez::recover(&sextic, config.tol) {
        Some(params) => {
            let report = SexticReport {
                params: Some(report::params_json(&params)),
                ..SexticReport::bare(input, "ok")
            };
            if config.json {
                report::print_json(&report);
            } else {
                print_sextic_report_text(&report, config);
            }
            ExitCode::SUCCESS
        }
        None => sextic_failure(
            input,
            "not_solvable",
            "not Milanez-solvable".to_string(),
            EXIT_NOT_SOLVABLE,
            config,
        ),
    }
}

fn cmd_resolvent(tokens: &[String], config: &Config) -> ExitCode {
    let (input, sextic) = match parse_sextic(tokens) {
        Ok(parsed) => parsed,
        Err(msg) => return parse_failure(&msg),
    };
    match milanez::recover(&sextic, config.tol) {
        Some(params) => {
            let resolvent = milanez::resolvent_quintic(&params);
            let report = SexticReport {
                params: Some(report::params_json(&params)),
                resolvent: Some(report::resolvent_json(&resolvent)),
                ..SexticReport::bare(input, "ok")
            };
            if config.json {
                report::print_json(&report);
            } else {
                print_sextic_report_text(&report, config);
            }
            ExitCode::SUCCESS
        }
        None => sextic_failure(
            input,
            "not_solvable",
            "not Milanez-solvable".to_string(),
            EXIT_NOT_SOLVABLE,
            config,
        ),
    }
}

fn cmd_split(tokens: &[String], config: &Config) -> ExitCode {
    let (input, quintic) = match parse_quintic(tokens) {
        Ok(parsed) => parsed,
        Err(msg) => return parse_failure(&msg),
    };
    match martinelli::split_quintic_auto(&quintic, config.tol) {
        Ok(split) => {
            let descending = |p: &Polynomial| -> Vec<report::ComplexJson> {
                p.coeffs().iter().rev().map(|&z| z.into()).collect()
            };
            let report = SplitReport {
                input,
                pair_sum: Some(split.pair_sum.into()),
                quadratic: Some(descending(&split.quadratic)),
                cubic: Some(descending(&split.cubic)),
                product_residual: Some(split.product_residual),
                status: "ok".to_string(),
                error: None,
            };
            if config.json {
                report::print_json(&report);
            } else {
                let p = config.precision;
                println!("pair_sum: {}", report::fmt_complex(split.pair_sum, p));
                let quad: Vec<sextic::Complex64> =
                    split.quadratic.coeffs().iter().rev().copied().collect();
                let cubic: Vec<sextic::Complex64> =
                    split.cubic.coeffs().iter().rev().copied().collect();
                println!("quadratic: {}", report::fmt_complex_list(&quad, p));
                println!("cubic: {}", report::fmt_complex_list(&cubic, p));
                println!(
                    "product_residual: {}",
                    report::fmt_residual(split.product_residual, p)
                );
                println!("status: ok");
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("{err}");
            let report = SplitReport {
                input,
                pair_sum: None,
                quadratic: None,
                cubic: None,
                product_residual: None,
                status: "numerical_failure".to_string(),
                error: Some(err.to_string()),
            };
            if config.json {
                report::print_json(&report);
            } else {
                println!("error: {err}");
                println!("status: numerical_failure");
            }
            ExitCode::from(EXIT_NUMERICAL)
        }
    }
}

fn cmd_martinelli(tokens: &[String], config: &Config) -> ExitCode {
    let (input, quintic) = match parse_quintic(tokens) {
        Ok(parsed) => parsed,
        Err(msg) => return parse_failure(&msg),
    };
    let poly = martinelli::martinelli_coeffs(&quintic);
    let mut ascending: Vec<sextic::Complex64> = poly.coeffs().to_vec();
    ascending.resize(11, sextic::Complex64::new(0.0, 0.0));
    let descending: Vec<sextic::Complex64> = ascending.iter().rev().copied().collect();
    let report = MartinelliReport {
        input,
        ascending: ascending.iter().map(|&z| z.into()).collect(),
        descending: descending.iter().map(|&z| z.into()).collect(),
        status: "ok".to_string(),
    };
    if config.json {
        report::print_json(&report);
    } else {
        let p = config.precision;
        println!("ascending: {}", report::fmt_complex_list(&ascending, p));
        println!("descending: {}", report::fmt_complex_list(&descending, p));
        println!("status: ok");
    }
    ExitCode::SUCCESS
}
