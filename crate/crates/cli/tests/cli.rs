//! End-to-end tests of the `baxter` binary: report envelope, exit-code
//! contract, payload determinism, spec-file ingestion, and the canned
//! example invocations.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

use baxter_core::precursive::PRecurrence;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_baxter"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn tmp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("baxter-cli-{}-{name}", std::process::id()))
}

// ---------------------------------------------------------------------------
// Report envelope
// ---------------------------------------------------------------------------

#[test]
fn seq_report_has_versioned_envelope_and_exact_terms() {
    let out = run(&["seq", "--seq", "baxter", "--upto", "8"]);
    assert!(out.status.success());
    let doc = report(&out);
    assert_eq!(doc["schema_version"], 1);
    assert!(doc["tool_version"].as_str().is_some_and(|v| !v.is_empty()));
    assert_eq!(doc["command"]["subcommand"], "seq");
    assert_eq!(doc["command"]["upto"], 8);
    assert!(doc["timing_ms"].is_u64());
    assert_eq!(doc["payload"]["start_index"], 0);
    assert_eq!(
        doc["payload"]["terms"],
        serde_json::json!(["1", "1", "2", "6", "22", "92", "422", "2074", "10754"])
    );
}

#[test]
fn table_format_renders_plain_text() {
    let out = run(&["seq", "--seq", "catalan", "--upto", "5", "--format", "table"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("baxter "));
    assert!(text.contains("a_5 = 42"));
    assert!(!text.contains('{'));
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let path = tmp_path("out.json");
    let out = run(&[
        "seq",
        "--seq",
        "catalan",
        "--upto",
        "5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["payload"]["terms"][5], "42");
    fs::remove_file(&path).ok();
}

// ---------------------------------------------------------------------------
// Example invocations
// ---------------------------------------------------------------------------

#[test]
fn interlace_example_verdict_is_true() {
    let out = run(&[
        "interlace",
        "--family",
        "baxter",
        "--range",
        "1..20",
        "--mode",
        "strict",
    ]);
    assert!(out.status.success());
    let doc = report(&out);
    assert_eq!(doc["payload"]["ok"], true);
    assert_eq!(doc["payload"]["first_failure_pair"], Value::Null);
    let pairs = doc["payload"]["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 19);
    assert!(pairs
        .iter()
        .all(|p| p["relation"].as_str().unwrap().starts_with("Strictly")));
}

#[test]
fn certify_example_produces_closed_certificate() {
    let out = run(&["certify", "--seq", "baxter", "--r", "2", "--eta", "4"]);
    assert!(out.status.success());
    let doc = report(&out);
    let cert = &doc["payload"]["certificate"];
    assert_eq!(cert["verdict"]["status"], "certified");
    assert_eq!(cert["level_thresholds"].as_array().unwrap().len(), 2);
    let checked = cert["initial_check_upto"].as_i64().unwrap();
    for (j, nj) in cert["level_thresholds"].as_array().unwrap().iter().enumerate() {
        assert!(checked >= nj.as_i64().unwrap() + 2 * (j as i64 + 1));
    }
    // re-checkable: the recurrence rides along with the certificate
    assert_eq!(doc["payload"]["recurrence"]["order"], 2);
}

#[test]
fn conjecture_scan_reports_all_strict() {
    let out = run(&[
        "conjecture", "--id", "1", "--q", "1..3", "--n", "1..8", "--m", "2",
    ]);
    assert!(out.status.success());
    let doc = report(&out);
    assert_eq!(doc["payload"]["ok"], true);
    let scans = doc["payload"]["scans"].as_array().unwrap();
    assert_eq!(scans.len(), 3);
    assert!(scans.iter().all(|s| s["first_failure"].is_null()));
}

// ---------------------------------------------------------------------------
// Exit-code contract
// ---------------------------------------------------------------------------

#[test]
fn false_verdict_exits_one_and_still_reports() {
    // F_{n,1} = (1+t)^n: consecutive members share every root, so the
    // strict scan is a well-posed check that comes back false.
    let out = run(&[
        "interlace", "--family", "f", "--m", "1", "--range", "1..6", "--mode", "strict",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc = report(&out);
    assert_eq!(doc["payload"]["ok"], false);
    assert!(doc["payload"]["first_failure_pair"].is_object());
    assert!(doc["payload"]["pairs"]
        .as_array()
        .unwrap()
        .iter()
        .any(|p| p["shared_root_degree"].as_i64().unwrap() >= 1));

    // the same family passes the generalized check
    let out = run(&[
        "interlace", "--family", "f", "--m", "1", "--range", "1..6", "--mode", "generalized",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_and_resource_errors_exit_two() {
    let out = run(&["seq", "--seq", "fibonacci", "--upto", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown builtin"));

    // clap-level usage error (missing required flag)
    let out = run(&["interlace", "--family", "baxter"]);
    assert_eq!(out.status.code(), Some(2));

    // enumeration past the cap is a resource error, not a crash
    let out = run(&["enumerate", "--n", "11"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("resource"));
}

#[test]
fn enumerate_matches_formula_and_exits_zero() {
    let out = run(&["enumerate", "--n", "6"]);
    assert!(out.status.success());
    let doc = report(&out);
    assert_eq!(doc["payload"]["matches_formula"], true);
    assert_eq!(doc["payload"]["total"], "422");
    assert_eq!(doc["payload"]["palindromic"], true);
}

// ---------------------------------------------------------------------------
// Determinism and spec-file ingestion
// ---------------------------------------------------------------------------

#[test]
fn payloads_are_byte_identical_across_runs() {
    let args = [
        "hankel", "--seq", "baxter", "--upto-order", "5", "--offset", "0", "--offset", "1",
    ];
    let (a, b) = (run(&args), run(&args));
    assert!(a.status.success() && b.status.success());
    let (mut da, mut db) = (report(&a), report(&b));
    assert_eq!(
        serde_json::to_string(&da["payload"]).unwrap(),
        serde_json::to_string(&db["payload"]).unwrap()
    );
    // the whole document agrees once timing is set aside
    da.as_object_mut().unwrap().remove("timing_ms");
    db.as_object_mut().unwrap().remove("timing_ms");
    assert_eq!(da, db);
}

#[test]
fn hankel_reports_the_offset_with_the_sign_change() {
    let out = run(&["hankel", "--seq", "baxter", "--upto-order", "5"]);
    assert!(out.status.success());
    let doc = report(&out);
    let tables = doc["payload"]["tables"].as_array().unwrap();
    assert_eq!(tables[0]["offset"], 0);
    assert_eq!(tables[0]["minors"][4], "-616");
    assert_eq!(tables[0]["first_negative_order"], 5);
    assert_eq!(tables[1]["offset"], 1);
    assert_eq!(tables[1]["first_negative_order"], Value::Null);
}

#[test]
fn spec_file_matches_builtin() {
    let path = tmp_path("catalan-spec.json");
    fs::write(&path, PRecurrence::catalan().to_json()).unwrap();
    let from_file = run(&["seq", "--spec-file", path.to_str().unwrap(), "--upto", "7"]);
    let from_builtin = run(&["seq", "--seq", "catalan", "--upto", "7"]);
    assert!(from_file.status.success());
    let (df, db) = (report(&from_file), report(&from_builtin));
    assert_eq!(df["payload"]["terms"], db["payload"]["terms"]);
    fs::remove_file(&path).ok();
}

#[test]
fn asymp_reports_catalan_expansion() {
    let out = run(&["asymp", "--seq", "catalan", "--eta", "3"]);
    assert!(out.status.success());
    let doc = report(&out);
    let p = &doc["payload"];
    assert_eq!(p["ratio_expansion"]["rho"], "4");
    assert_eq!(p["ratio_expansion"]["d"], serde_json::json!(["-3/2", "3", "-6"]));
    assert_eq!(p["sequence_expansion"]["nu"], "-3/2");
    assert_eq!(p["asymptotic_order"], 1);
    assert_eq!(p["note"], Value::Null);
}
