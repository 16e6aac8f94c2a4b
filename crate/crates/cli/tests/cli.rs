use std::collections::HashSet;
use std::process::Command;

use carlitz::VariantTag;
use carlitz_cli::registry::{all_ids, classical_bernoulli, IN_SCOPE};
use carlitz_cli::{emit_table, expand, padic_run, registry, run_suite, CliError, ExpandTarget, RunOptions, Selection, TableFormat, TableKind};

fn small() -> RunOptions {
    RunOptions { max_n: Some(2), budget: None }
}

#[test]
fn registry_covers_every_in_scope_item() {
    let ids = all_ids();
    for id in IN_SCOPE {
        assert!(ids.contains(id), "{id} is not registered");
    }
}

#[test]
fn registry_entries_are_unique() {
    let mut seen = HashSet::new();
    for d in registry() {
        for e in &d.entries {
            assert!(seen.insert((e.id, e.variant)), "duplicate entry {} {}", e.id, e.variant);
        }
    }
}

#[test]
fn every_produced_cell_is_declared() {
    for d in registry() {
        for cell in d.cells(Some(2)) {
            for r in cell.run() {
                assert!(d.expectation(&r.id, r.variant).is_some(), "{} [{}] not declared", r.id, r.variant);
            }
        }
    }
}

#[test]
fn empty_selection_is_an_empty_passing_report() {
    let rep = run_suite(&Selection::parse(""), &RunOptions::default()).unwrap();
    assert!(rep.results.is_empty());
    assert_eq!(rep.exit_code(), 0);
}

#[test]
fn unknown_id_is_a_usage_error() {
    let err = run_suite(&Selection::parse("thm5,nope"), &RunOptions::default()).unwrap_err();
    assert!(matches!(err, CliError::Usage(_)));
    assert_eq!(err.exit_code(), 2);
}

#[test]
fn theorem5_passes() {
    let rep = run_suite(&Selection::parse("thm5"), &RunOptions::default()).unwrap();
    assert_eq!(rep.results.len(), 66);
    assert!(rep.results.iter().all(|r| r.status == "pass"));
    assert_eq!(rep.exit_code(), 0);
}

#[test]
fn theorem8_reports_the_printed_sign() {
    let rep = run_suite(&Selection::parse("thm8"), &RunOptions::default()).unwrap();
    assert_eq!(rep.exit_code(), 0);
    let at_one = rep
        .cells("thm8", VariantTag::AsPrinted)
        .find(|c| c.params.get("n") == Some(&1))
        .unwrap();
    assert_eq!(at_one.status, "expected-counterexample");
    assert_eq!(at_one.lhs.as_deref(), Some("1/(1+q)"));
    assert_eq!(at_one.rhs.as_deref(), Some("-1/(1+q)"));
    assert_eq!(rep.variant("thm8", VariantTag::Corrected).unwrap().outcome, "ok");
}

#[test]
fn printed_form_passing_everywhere_fails_the_run() {
    // at n = 0 alone the printed sign of thm8 is harmless
    let rep = run_suite(&Selection::parse("thm8"), &RunOptions { max_n: Some(0), budget: None }).unwrap();
    assert_eq!(rep.variant("thm8", VariantTag::AsPrinted).unwrap().outcome, "unexpected-pass");
    assert_eq!(rep.exit_code(), 1);
}

#[test]
fn reports_are_sorted_and_deterministic() {
    let sel = Selection::parse("eq11,thm8,eq16,padic-beta");
    let a = run_suite(&sel, &small()).unwrap().to_json();
    let b = run_suite(&sel, &small()).unwrap().to_json();
    assert_eq!(a, b);
    assert!(a.starts_with("{\n  \"schema\": \"carlitz.report/v1\""));
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    let keys: Vec<(String, String)> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["id"].as_str().unwrap().to_string(), r["variant"].as_str().unwrap().to_string()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn exhausted_budget_marks_the_report_incomplete() {
    let opts = RunOptions { max_n: None, budget: Some(std::time::Duration::from_nanos(1)) };
    let rep = run_suite(&Selection::parse("eq12"), &opts).unwrap();
    if !rep.complete {
        assert!(rep.skipped_cells > 0);
        assert_eq!(rep.exit_code(), 1);
    }
}

#[test]
fn beta_table_csv() {
    let csv = emit_table(TableKind::Beta, 2, TableFormat::Csv);
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows, ["0,1,1", "1,-1/(1+q),-1/2", "2,q/(1+2*q+2*q^2+q^3),1/6"]);
}

#[test]
fn stirling_and_gauss_tables() {
    let csv = emit_table(TableKind::S1, 2, TableFormat::Csv);
    assert!(csv.lines().any(|l| l == "2,1,-1,-1"));
    let json: serde_json::Value = serde_json::from_str(&emit_table(TableKind::Qbinom, 0, TableFormat::Json)).unwrap();
    assert_eq!(json["entries"].as_array().unwrap().len(), 1);
    assert_eq!(json["entries"][0]["value"], "1");
    let tex = emit_table(TableKind::Beta, 1, TableFormat::Latex);
    assert!(tex.starts_with("\\begin{tabular}") && tex.contains("\\verb|-1/(1+q)|"));
}

#[test]
fn padic_run_examples() {
    let v = padic_run(5, 25, 6, 1, 4).unwrap();
    let errs: Vec<i64> = v["levels"].as_array().unwrap().iter().map(|l| l["error_valuation"].as_i64().unwrap()).collect();
    assert!(errs.windows(2).all(|w| w[1] > w[0]), "{errs:?}");
    assert_eq!(v["converges"], true);

    let v0 = padic_run(5, 25, 6, 0, 3).unwrap();
    for l in v0["levels"].as_array().unwrap() {
        assert_eq!(l["value"]["digits"], 1);
        assert_eq!(l["value"]["shift"], 0);
        assert_eq!(l["saturated"], true);
    }

    let err = padic_run(5, 25, 7, 1, 4).unwrap_err();
    assert_eq!(err.exit_code(), 2);
    assert!(err.to_string().contains("|q-1|_p"));
}

#[test]
fn expand_both_targets() {
    let (text, ok) = expand(ExpandTarget::Lemma1, 1, 4);
    assert!(ok);
    assert!(text.starts_with("lhs = (-1) + (1)*q"));
    assert!(expand(ExpandTarget::Eq7, 2, 6).1);
}

#[test]
fn classical_oracle_values() {
    let b = classical_bernoulli(4);
    let s: Vec<String> = b.iter().map(|x| x.to_string()).collect();
    assert_eq!(s, ["1", "-1/2", "1/6", "0", "-1/30"]);
}

fn carlitz() -> Command {
    Command::new(env!("CARGO_BIN_EXE_carlitz"))
}

#[test]
fn binary_exit_codes() {
    let ok = carlitz().args(["verify", "--suite", "thm5,eq13", "--max-n", "4"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let unknown = carlitz().args(["verify", "--suite", "nope"]).output().unwrap();
    assert_eq!(unknown.status.code(), Some(2));
    let bad_flag = carlitz().args(["table", "--kind", "gamma"]).output().unwrap();
    assert_eq!(bad_flag.status.code(), Some(2));
    let region = carlitz().args(["padic", "--p", "5", "--q", "7"]).output().unwrap();
    assert_eq!(region.status.code(), Some(2));
    let unexpected = carlitz().args(["verify", "--suite", "thm8", "--max-n", "0"]).output().unwrap();
    assert_eq!(unexpected.status.code(), Some(1));
}

#[test]
fn report_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = carlitz()
        .args(["verify", "--suite", "eq11", "--max-n", "2", "--report"])
        .arg(&path)
        .args(["--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["schema"], "carlitz.report/v1");
    assert!(v.get("timestamp").is_none());
    let cell = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["id"] == "eq11" && r["variant"] == "as-printed" && r["params"]["m"] == 1 && r["params"]["n"] == 1)
        .unwrap();
    assert_eq!(cell["lhs"], "2/(1+q)");
    assert_eq!(cell["rhs"], "1");
}
