//! Exact tables of beta_n, q-Stirling numbers and Gaussian binomials.

use serde::Serialize;

use carlitz::bernoulli::BernoulliTable;
use carlitz::qcore::q_binomial;
use carlitz::stirling::{s1_table, s2_table, StirlingTable};
use carlitz::{RatFunc, Rational};

pub const TABLE_SCHEMA: &str = "carlitz.table/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableKind {
    Beta,
    S1,
    S2,
    Qbinom,
}

impl TableKind {
    fn name(self) -> &'static str {
        match self {
            TableKind::Beta => "beta",
            TableKind::S1 => "s1",
            TableKind::S2 => "s2",
            TableKind::Qbinom => "qbinom",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Debug, Serialize)]
struct Row {
    n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    at_q_1: Option<String>,
}

#[derive(Serialize)]
struct TableJson {
    schema: &'static str,
    kind: &'static str,
    max_n: u32,
    entries: Vec<Row>,
}

fn at_one(f: &RatFunc) -> String {
    f.eval(&Rational::from_integer(1.into()))
        .map(|v| v.to_string())
        .unwrap_or_else(|_| "pole".into())
}

fn stirling_rows(t: &StirlingTable<Rational>, max_n: u32) -> Vec<Row> {
    (0..=max_n)
        .flat_map(|n| (0..=n).map(move |k| (n, k)))
        .map(|(n, k)| {
            let v = t.get(n as usize, k as i64);
            Row { n, k: Some(k), value: v.to_canonical_string(), at_q_1: Some(at_one(&v)) }
        })
        .collect()
}

fn rows(kind: TableKind, max_n: u32) -> Vec<Row> {
    match kind {
        TableKind::Beta => BernoulliTable::<Rational>::new(max_n)
            .values()
            .iter()
            .enumerate()
            .map(|(n, b)| Row { n: n as u32, k: None, value: b.to_canonical_string(), at_q_1: Some(at_one(b)) })
            .collect(),
        TableKind::S1 => stirling_rows(&s1_table(max_n as usize), max_n),
        TableKind::S2 => stirling_rows(&s2_table(max_n as usize), max_n),
        TableKind::Qbinom => (0..=max_n)
            .flat_map(|n| (0..=n).map(move |k| (n, k)))
            .map(|(n, k)| Row {
                n,
                k: Some(k),
                value: q_binomial::<Rational>(n, k as i64).to_canonical_string(),
                at_q_1: None,
            })
            .collect(),
    }
}

fn latex_cell(s: &str) -> String {
    format!("\\verb|{s}|")
}

pub fn emit_table(kind: TableKind, max_n: u32, format: TableFormat) -> String {
    let rows = rows(kind, max_n);
    let has_k = kind != TableKind::Beta;
    let has_limit = kind != TableKind::Qbinom;
    match format {
        TableFormat::Json => {
            let v = TableJson { schema: TABLE_SCHEMA, kind: kind.name(), max_n, entries: rows };
            let mut s = serde_json::to_string_pretty(&v).expect("table serializes");
            s.push('\n');
            s
        }
        TableFormat::Csv => {
            let mut header = vec!["n"];
            if has_k {
                header.push("k");
            }
            header.push("value");
            if has_limit {
                header.push("at_q_1");
            }
            let mut out = header.join(",") + "\n";
            for r in &rows {
                let mut cols = vec![r.n.to_string()];
                cols.extend(r.k.map(|k| k.to_string()));
                cols.push(r.value.clone());
                cols.extend(r.at_q_1.clone());
                out.push_str(&cols.join(","));
                out.push('\n');
            }
            out
        }
        TableFormat::Latex => {
            let ncols = 2 + has_k as usize + has_limit as usize;
            let mut out = format!("\\begin{{tabular}}{{{}}}\n", "l".repeat(ncols));
            let mut header = vec!["$n$"];
            if has_k {
                header.push("$k$");
            }
            header.push("value");
            if has_limit {
                header.push("$q \\to 1$");
            }
            out.push_str(&format!("{} \\\\\n\\hline\n", header.join(" & ")));
            for r in &rows {
                let mut cols = vec![r.n.to_string()];
                cols.extend(r.k.map(|k| k.to_string()));
                cols.push(latex_cell(&r.value));
                cols.extend(r.at_q_1.as_deref().map(latex_cell));
                out.push_str(&format!("{} \\\\\n", cols.join(" & ")));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
    }
}
