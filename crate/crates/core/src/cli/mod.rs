//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain
//! error. With `--output json` every number is written as a decimal string.

mod verify;

pub use verify::{
    random_coprime_partset, run_verify, Failure, FailureDetail, VerifyConfig, VerifyReport,
};

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::bernoulli::{bernoulli_barnes, bernoulli_numbers};
use crate::error::{Error, Result};
use crate::exact_arith::{to_integer, Poly, Rational};
use crate::oracle::oracle_count;
use crate::partset::PartSet;
use crate::reductions::{
    closed_form_correction, decompose, section3_count, theorem1_count, theorem2_count, theorem3_rhs,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DOMAIN: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "denumerant",
    version,
    about = "Exact restricted partition counts"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    output: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    Theorem1,
    Section3,
    ClosedForm,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Theorem1 => "theorem1",
            Method::Section3 => "section3",
            Method::ClosedForm => "closed-form",
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count p_A(n).
    Count {
        /// Comma-separated positive parts, e.g. 2,3,5.
        #[arg(long, value_parser = parse_parts)]
        parts: Parts,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
    },
    /// Bernoulli–Barnes polynomials B_0..B_max as coefficient lists in x.
    Bb {
        #[arg(long, value_parser = parse_parts)]
        parts: Parts,
        #[arg(long = "max-index", alias = "order", default_value_t = 2)]
        max_index: usize,
    },
    /// Bernoulli numbers B_0..B_order (B_1 = +1/2).
    Bernoulli {
        #[arg(long, alias = "max-index", default_value_t = 10)]
        order: usize,
    },
    /// p_A(P - x) for 1 <= x < sum(A).
    Theorem2 {
        #[arg(long, value_parser = parse_parts)]
        parts: Parts,
        #[arg(long)]
        x: u64,
    },
    /// p_A(P - x) + (-1)^k p_A(x - sum(A)) for sum(A) <= x <= P.
    Theorem3 {
        #[arg(long, value_parser = parse_parts)]
        parts: Parts,
        #[arg(long)]
        x: u64,
    },
    /// Random sweep checking every formula against the oracle.
    Verify {
        #[arg(long, default_value_t = 2)]
        k_min: usize,
        #[arg(long, default_value_t = 5)]
        k_max: usize,
        #[arg(long, default_value_t = 13)]
        max_part: u64,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Part sets with a larger product are resampled.
        #[arg(long, default_value_t = 100_000)]
        max_product: u64,
        #[arg(long, default_value_t = 10_000)]
        max_attempts: usize,
    },
}

#[derive(Debug, Clone)]
struct Parts(Vec<u64>);

fn parse_parts(raw: &str) -> std::result::Result<Parts, String> {
    let parts = raw
        .split(',')
        .map(|t| {
            let t = t.trim();
            match t.parse::<u64>() {
                Ok(0) | Err(_) => Err(format!("'{t}' is not a positive integer")),
                Ok(v) => Ok(v),
            }
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(Parts(parts))
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn failure(code: u8, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome::failure(EXIT_USAGE, rendered)
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    match execute(&cli) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::failure(EXIT_DOMAIN, format!("error: {e}\n")),
    }
}

fn decimal(v: impl ToString) -> Value {
    Value::String(v.to_string())
}

fn compute_json(
    subcommand: &str,
    parts: &PartSet,
    input: Value,
    method: Option<Method>,
    value: Value,
) -> String {
    let doc = json!({
        "subcommand": subcommand,
        "parts": parts.parts().iter().map(decimal).collect::<Vec<_>>(),
        "input": input,
        "method": method.map(Method::name),
        "value": value,
    });
    format!("{doc}\n")
}

fn count_by(method: Method, parts: &PartSet, n: u64) -> Result<BigInt> {
    match method {
        Method::Oracle => oracle_count(parts, n).map(BigInt::from),
        Method::Theorem1 => theorem1_count(parts, n),
        Method::Section3 => section3_count(parts, n),
        Method::ClosedForm => {
            let correction = closed_form_correction(parts, n)?;
            let delta = to_integer(&correction).ok_or_else(|| Error::NonIntegral {
                what: "closed-form correction",
                value: correction.clone(),
                parts: parts.parts().to_vec(),
            })?;
            let base = oracle_count(parts, decompose(parts, n).r)?;
            Ok(BigInt::from(base) + delta)
        }
    }
}

fn poly_json(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(decimal).collect())
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let json = cli.output == OutputFormat::Json;
    let stdout = match &cli.command {
        Command::Count { parts, n, method } => {
            let parts = PartSet::new(parts.0.clone())?;
            let value = count_by(*method, &parts, *n)?;
            if json {
                compute_json(
                    "count",
                    &parts,
                    json!({ "n": decimal(n) }),
                    Some(*method),
                    decimal(&value),
                )
            } else {
                format!("{value}\n")
            }
        }
        Command::Bb { parts, max_index } => {
            let parts = PartSet::new(parts.0.clone())?;
            let polys = bernoulli_barnes(&parts, *max_index);
            if json {
                let value = Value::Array(polys.iter().map(|b| poly_json(&b.poly)).collect());
                compute_json(
                    "bb",
                    &parts,
                    json!({ "max_index": decimal(max_index) }),
                    None,
                    value,
                )
            } else {
                polys.iter().fold(String::new(), |mut out, b| {
                    let _ = writeln!(out, "B_{}(x) = {}", b.index, b.poly);
                    out
                })
            }
        }
        Command::Bernoulli { order } => {
            let table = bernoulli_numbers(*order);
            if json {
                let doc = json!({
                    "subcommand": "bernoulli",
                    "input": { "order": decimal(order) },
                    "value": table.values().iter().map(decimal).collect::<Vec<_>>(),
                });
                format!("{doc}\n")
            } else {
                table
                    .values()
                    .iter()
                    .enumerate()
                    .fold(String::new(), |mut out, (i, b)| {
                        let _ = writeln!(out, "B_{i} = {b}");
                        out
                    })
            }
        }
        Command::Theorem2 { parts, x } => {
            let parts = PartSet::new(parts.0.clone())?;
            let value = theorem2_count(&parts, *x)?;
            if json {
                compute_json(
                    "theorem2",
                    &parts,
                    json!({ "x": decimal(x) }),
                    None,
                    decimal(&value),
                )
            } else {
                format!("{value}\n")
            }
        }
        Command::Theorem3 { parts, x } => {
            let parts = PartSet::new(parts.0.clone())?;
            let value: Rational = theorem3_rhs(&parts, *x)?;
            if json {
                compute_json(
                    "theorem3",
                    &parts,
                    json!({ "x": decimal(x) }),
                    None,
                    decimal(&value),
                )
            } else {
                format!("{value}\n")
            }
        }
        Command::Verify {
            k_min,
            k_max,
            max_part,
            trials,
            seed,
            max_product,
            max_attempts,
        } => {
            if *k_min == 0 || k_min > k_max {
                return Ok(Outcome::failure(
                    EXIT_USAGE,
                    format!("error: need 1 <= k-min <= k-max, got {k_min} and {k_max}\n"),
                ));
            }
            let config = VerifyConfig {
                k_min: *k_min,
                k_max: *k_max,
                max_part: *max_part,
                trials: *trials,
                seed: *seed,
                max_product: *max_product,
                max_attempts: *max_attempts,
            };
            let report = run_verify(&config)?;
            return Ok(verify_outcome(&report, json));
        }
    };
    Ok(Outcome::ok(stdout))
}

fn failure_json(f: &Failure) -> Value {
    let mut entry = json!({
        "trial": decimal(f.trial),
        "check": f.check.name(),
        "parts": f.parts.iter().map(decimal).collect::<Vec<_>>(),
        "input": { f.check.input_name(): decimal(f.input) },
    });
    let map = entry.as_object_mut().expect("object literal");
    match &f.detail {
        FailureDetail::Mismatch { lhs, rhs } => {
            map.insert("lhs".into(), decimal(lhs));
            map.insert("rhs".into(), decimal(rhs));
        }
        FailureDetail::Error(msg) => {
            map.insert("error".into(), Value::String(msg.clone()));
        }
    }
    entry
}

fn verify_outcome(report: &VerifyReport, json: bool) -> Outcome {
    let stdout = if json {
        let doc = json!({
            "trials": decimal(report.trials),
            "failures": report.failures.iter().map(failure_json).collect::<Vec<_>>(),
            "seed": decimal(report.seed),
        });
        format!("{doc}\n")
    } else {
        let mut out = format!(
            "trials: {}\nchecks: {}\nseed: {}\nfailures: {}\n",
            report.trials,
            report.checks,
            report.seed,
            report.failures.len()
        );
        for f in &report.failures {
            let detail = match &f.detail {
                FailureDetail::Mismatch { lhs, rhs } => format!("oracle={lhs} formula={rhs}"),
                FailureDetail::Error(msg) => format!("error: {msg}"),
            };
            let _ = writeln!(
                out,
                "trial {} {} parts={:?} {}={}: {}",
                f.trial,
                f.check,
                f.parts,
                f.check.input_name(),
                f.input,
                detail
            );
        }
        out
    };
    Outcome {
        code: if report.passed() {
            EXIT_OK
        } else {
            EXIT_VERIFY_FAILED
        },
        stdout,
        stderr: format!("elapsed: {:.3}s\n", report.elapsed.as_secs_f64()),
    }
}
