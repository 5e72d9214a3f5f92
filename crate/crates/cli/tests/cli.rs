//! End-to-end tests of the binary: exit-code contract, JSON output
//! round-trips, determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_zhualg"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write_gram(name: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("zhualg-test-{name}-{}.json", std::process::id()));
    std::fs::write(&path, content).unwrap();
    path
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn lattice_analyze_a1() {
    let path = write_gram("a1", r#"{"gram": [[2]]}"#);
    let out = run(&["lattice", "analyze", "--gram", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.contains("det: 2"));
    assert!(text.contains("algebra dimension: 5"));
}

#[test]
fn lattice_verify_a2_json_round_trips() {
    let path = write_gram("a2", r#"{"gram": [[2,-1],[-1,2]]}"#);
    let out = run(&["lattice", "verify", "--gram", path.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: zhualg::lattice::LatticeReport =
        serde_json::from_str(&stdout_str(&out)).expect("valid report JSON");
    assert_eq!(report.det, 3);
    assert_eq!(report.algebra_dim, 19);
    assert_eq!(report.semisimple, Some(true));
    assert_eq!(report.relations_verified, Some(true));
    // parse(emit(report)) == report
    let re = serde_json::to_string(&report).unwrap();
    let back: zhualg::lattice::LatticeReport = serde_json::from_str(&re).unwrap();
    assert_eq!(back, report);
}

#[test]
fn invalid_gram_exits_2() {
    let path = write_gram("odd", r#"{"gram": [[1]]}"#);
    let out = run(&["lattice", "analyze", "--gram", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("odd diagonal"), "stderr: {err}");
}

#[test]
fn missing_gram_file_exits_2() {
    let out = run(&["lattice", "analyze", "--gram", "/nonexistent/gram.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn rbar_info_json() {
    let out = run(&["rbar", "info", "--k", "1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: zhualg::rbar::AlgebraReport =
        serde_json::from_str(&stdout_str(&out)).expect("valid report JSON");
    assert_eq!(report.algebra_dim, 5);
    assert!(report.semisimple);
    let dims: Vec<usize> = report.irreducibles.iter().map(|i| i.dim).collect();
    assert_eq!(dims, vec![1, 2]);
}

#[test]
fn rbar_rejects_k_zero() {
    let out = run(&["rbar", "info", "--k", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn smith_classify_inline_polynomial() {
    let out = run(&["smith", "classify", "--g", "[0,2]", "--max-dim", "4", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<zhualg::smith::Classification> =
        serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[1].rational_weights, vec![zhualg::rat::rat(1, 2)]);
}

#[test]
fn smith_classify_rejects_bad_polynomial() {
    let out = run(&["smith", "classify", "--g", "[0,zebra]"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn smith_requires_exactly_one_g_source() {
    let out = run(&["smith", "classify"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["smith", "classify", "--g", "[0,2]", "--g-k", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn smith_check_semisimple_passes_for_g2() {
    let out = run(&["smith", "check-semisimple", "--g-k", "2", "--max-j", "12"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn smith_check_semisimple_fails_for_square() {
    // g = (x-1)^2: h_0 is not squarefree, so verification fails with exit 1
    let out = run(&["smith", "check-semisimple", "--g", "[1,-2,1]", "--max-j", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn smith_casimir_passes() {
    let out = run(&["smith", "casimir", "--g-k", "2", "--max-r", "3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn identities_verify_json() {
    let out = run(&["identities", "verify", "--suite", "ef", "--max-k", "4", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let reports: Vec<zhualg::IdentityReport> =
        serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(reports.len(), 4);
    assert!(reports.iter().all(|r| r.pass));
}

#[test]
fn identities_unknown_suite_exits_2() {
    let out = run(&["identities", "verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn identities_crosscheck() {
    let out = run(&["identities", "crosscheck", "--max-k", "2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn identical_inputs_give_identical_bytes() {
    let path = write_gram("det", r#"{"gram": [[4]]}"#);
    let args = ["lattice", "verify", "--gram", path.to_str().unwrap(), "--json"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    let third = run(&["identities", "verify", "--suite", "all", "--max-k", "3", "--max-nm", "6", "--max-r", "6", "--json"]);
    let fourth = run(&["identities", "verify", "--suite", "all", "--max-k", "3", "--max-nm", "6", "--max-r", "6", "--json"]);
    assert_eq!(third.stdout, fourth.stdout);
}
