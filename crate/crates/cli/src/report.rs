//! Batch runner and the JSON report.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use carlitz::{IdentityResult, VariantTag, Verdict};

use crate::registry::{registry, Expect};
use crate::CliError;

pub const REPORT_SCHEMA: &str = "carlitz.report/v1";

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Replaces the main index bound of every selected identity.
    pub max_n: Option<u32>,
    /// Cells not started within this time are skipped.
    pub budget: Option<Duration>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    Ids(Vec<String>),
}

impl Selection {
    /// `all`, a comma-separated id list, or the empty string.
    pub fn parse(s: &str) -> Selection {
        match s.trim() {
            "all" => Selection::All,
            s => Selection::Ids(s.split(',').map(str::trim).filter(|x| !x.is_empty()).map(String::from).collect()),
        }
    }

    fn names(&self) -> Vec<String> {
        match self {
            Selection::All => vec!["all".into()],
            Selection::Ids(ids) => ids.clone(),
        }
    }

    fn wants(&self, id: &str) -> bool {
        match self {
            Selection::All => true,
            Selection::Ids(ids) => ids.iter().any(|x| x == id),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct Parameters {
    pub suite: Vec<String>,
    pub max_n: Option<u32>,
    pub budget_seconds: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CellRecord {
    pub id: String,
    pub variant: &'static str,
    pub params: BTreeMap<String, i64>,
    pub expectation: &'static str,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Outcome of one (id, variant) across its cells.
#[derive(Clone, Debug, Serialize)]
pub struct VariantOutcome {
    pub id: String,
    pub variant: &'static str,
    pub expectation: &'static str,
    pub cells: usize,
    pub equal: usize,
    pub counterexamples: usize,
    pub undefined: usize,
    /// `ok`, `failed`, `unexpected-pass` or `reported`.
    pub outcome: &'static str,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub counterexample: usize,
    pub undefined: usize,
    pub diagnostic: usize,
    pub failed_variants: usize,
    pub unexpected_passes: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub tool: Tool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub parameters: Parameters,
    pub complete: bool,
    pub skipped_cells: usize,
    pub results: Vec<CellRecord>,
    pub variants: Vec<VariantOutcome>,
    pub summary: Summary,
}

impl Report {
    /// 0 when every must-pass variant held, every expected counterexample
    /// was observed and the run was complete; 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        let ok = self.complete && self.summary.failed_variants == 0 && self.summary.unexpected_passes == 0;
        if ok {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per variant plus a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.variants {
            out.push_str(&format!(
                "{:<8} {} [{}] {}: {} cells, {} equal, {} counterexamples, {} undefined\n",
                v.outcome, v.id, v.variant, v.expectation, v.cells, v.equal, v.counterexamples, v.undefined
            ));
        }
        let s = &self.summary;
        out.push_str(&format!(
            "summary: {} pass, {} counterexample, {} undefined, {} diagnostic; {} failed, {} unexpected passes{}\n",
            s.pass,
            s.counterexample,
            s.undefined,
            s.diagnostic,
            s.failed_variants,
            s.unexpected_passes,
            if self.complete { String::new() } else { format!("; INCOMPLETE ({} cells skipped)", self.skipped_cells) }
        ));
        out
    }

    pub fn cells<'a>(&'a self, id: &'a str, variant: VariantTag) -> impl Iterator<Item = &'a CellRecord> + 'a {
        self.results.iter().filter(move |r| r.id == id && r.variant == variant.as_str())
    }

    pub fn variant(&self, id: &str, variant: VariantTag) -> Option<&VariantOutcome> {
        self.variants.iter().find(|v| v.id == id && v.variant == variant.as_str())
    }
}

fn sort_key(r: &IdentityResult) -> (String, VariantTag, Vec<(String, i64)>) {
    (r.id.clone(), r.variant, r.params.clone())
}

pub fn run_suite(selection: &Selection, options: &RunOptions) -> Result<Report, CliError> {
    let reg = registry();
    if let Selection::Ids(ids) = selection {
        for id in ids {
            if !reg.iter().any(|d| d.ids().any(|x| x == id)) {
                return Err(CliError::Usage(format!("unknown identity id '{id}'")));
            }
        }
    }
    let chosen: Vec<_> = reg.iter().filter(|d| d.ids().any(|id| selection.wants(id))).collect();
    let cells: Vec<_> = chosen.iter().flat_map(|d| d.cells(options.max_n)).collect();
    let start = Instant::now();
    let outcomes: Vec<Option<Vec<IdentityResult>>> = cells
        .par_iter()
        .map(|c| match options.budget {
            Some(b) if start.elapsed() > b => None,
            _ => Some(c.run()),
        })
        .collect();
    let skipped = outcomes.iter().filter(|o| o.is_none()).count();
    let mut results: Vec<IdentityResult> = outcomes
        .into_iter()
        .flatten()
        .flatten()
        .filter(|r| selection.wants(&r.id))
        .collect();
    results.sort_by_key(sort_key);

    let expect_of = |r: &IdentityResult| {
        chosen
            .iter()
            .find_map(|d| d.expectation(&r.id, r.variant))
            .unwrap_or(Expect::MustPass)
    };

    let mut summary = Summary::default();
    let mut records = Vec::with_capacity(results.len());
    let mut groups: BTreeMap<(String, VariantTag), (Expect, usize, usize, usize, usize)> = BTreeMap::new();
    for r in &results {
        let expect = expect_of(r);
        let g = groups.entry((r.id.clone(), r.variant)).or_insert((expect, 0, 0, 0, 0));
        g.1 += 1;
        let (status, lhs, rhs, reason) = match (&r.verdict, expect) {
            (_, Expect::Diagnostic) => {
                summary.diagnostic += 1;
                let status = if r.holds() { "diagnostic-confirmed" } else { "diagnostic-inconclusive" };
                let (lhs, rhs) = match &r.verdict {
                    Verdict::Counterexample { lhs, rhs } => (Some(lhs.clone()), Some(rhs.clone())),
                    _ => (None, None),
                };
                (status, lhs, rhs, None)
            }
            (Verdict::Equal, _) => {
                summary.pass += 1;
                g.2 += 1;
                ("pass", None, None, None)
            }
            (Verdict::Counterexample { lhs, rhs }, e) => {
                summary.counterexample += 1;
                g.3 += 1;
                let status = if e == Expect::Counterexample { "expected-counterexample" } else { "counterexample" };
                (status, Some(lhs.clone()), Some(rhs.clone()), None)
            }
            (Verdict::Undefined { reason }, _) => {
                summary.undefined += 1;
                g.4 += 1;
                ("undefined", None, None, Some(reason.clone()))
            }
        };
        if expect == Expect::Diagnostic {
            g.2 += r.holds() as usize;
        }
        records.push(CellRecord {
            id: r.id.clone(),
            variant: r.variant.as_str(),
            params: r.params.iter().cloned().collect(),
            expectation: expect.as_str(),
            status,
            lhs,
            rhs,
            reason,
        });
    }

    let variants = groups
        .into_iter()
        .map(|((id, variant), (expect, cells, equal, ce, undef))| {
            let outcome = match expect {
                Expect::MustPass if equal == cells => "ok",
                Expect::MustPass => {
                    summary.failed_variants += 1;
                    "failed"
                }
                Expect::Counterexample if equal < cells => "ok",
                Expect::Counterexample => {
                    summary.unexpected_passes += 1;
                    "unexpected-pass"
                }
                Expect::Diagnostic => "reported",
            };
            VariantOutcome {
                id,
                variant: variant.as_str(),
                expectation: expect.as_str(),
                cells,
                equal,
                counterexamples: ce,
                undefined: undef,
                outcome,
            }
        })
        .collect();

    Ok(Report {
        schema: REPORT_SCHEMA,
        tool: Tool { name: "carlitz", version: env!("CARGO_PKG_VERSION") },
        timestamp: None,
        parameters: Parameters {
            suite: selection.names(),
            max_n: options.max_n,
            budget_seconds: options.budget.map(|d| d.as_secs_f64()),
        },
        complete: skipped == 0,
        skipped_cells: skipped,
        results: records,
        variants,
        summary,
    })
}
