//! Identity registry, verification runner, report and table emitters for
//! the `carlitz` command.

pub mod registry;
pub mod report;
pub mod tables;

use serde_json::{json, Value};
use thiserror::Error;

use carlitz::bernoulli::{eq7_sides, lemma1_sides};
use carlitz::padic::{beta_padic, ErrorValuation, PadicValue, QPoint};
use carlitz::{PadicError, Rational};

pub use registry::{registry, Descriptor, Expect};
pub use report::{run_suite, Report, RunOptions, Selection};
pub use tables::{emit_table, TableFormat, TableKind};

pub const PADIC_SCHEMA: &str = "carlitz.padic/v1";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Padic(#[from] PadicError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

fn value_json(v: &PadicValue) -> Value {
    json!({
        "digits": v.digits(),
        "shift": v.shift(),
        "abs_precision": v.abs_precision(),
        "text": v.to_string(),
    })
}

/// Riemann sums of `[x]_q^n` at levels `1..=levels` against `beta_n`.
pub fn padic_run(p: u64, precision: u32, q: i64, n: u32, levels: u32) -> Result<Value, CliError> {
    let qp = QPoint::new(p, precision, q).map_err(|e| match e {
        e @ (PadicError::QOutOfRegion { .. } | PadicError::NotOddPrime(_) | PadicError::PrecisionTooLarge { .. }) => {
            CliError::Usage(e.to_string())
        }
        e => CliError::Padic(e),
    })?;
    if levels < 2 {
        return Err(CliError::Usage("--levels must be at least 2".into()));
    }
    let c = beta_padic(n, &qp, levels)?;
    let levels_json: Vec<Value> = c
        .levels
        .iter()
        .map(|l| {
            let (v, saturated) = match l.error {
                ErrorValuation::Exact(v) => (v, false),
                ErrorValuation::AtLeast(v) => (v, true),
            };
            json!({
                "level": l.level,
                "value": value_json(&l.value),
                "error_valuation": v,
                "saturated": saturated,
            })
        })
        .collect();
    Ok(json!({
        "schema": PADIC_SCHEMA,
        "p": p,
        "precision": precision,
        "q": q,
        "n": n,
        "target": value_json(&c.target),
        "levels": levels_json,
        "converges": c.converges(),
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ExpandTarget {
    Lemma1,
    Eq7,
}

/// Both sides of a generating-function identity as truncated q-series.
/// Returns the text and whether the sides agree.
pub fn expand(target: ExpandTarget, m: u32, order: usize) -> (String, bool) {
    let (lhs, rhs) = match target {
        ExpandTarget::Lemma1 => lemma1_sides::<Rational>(m, order),
        ExpandTarget::Eq7 => eq7_sides::<Rational>(m, order),
    };
    let equal = lhs == rhs;
    (format!("lhs = {lhs}\nrhs = {rhs}\nequal = {equal}\n"), equal)
}
