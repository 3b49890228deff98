//! Exit-code and determinism contracts: 0 success, 1 failed check on good
//! input, 2 unusable input.

use std::process::Command;

const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const BRAID4: &str = "X(8,5,1,6) X(3,6,4,7) X(4,1,5,2) X(7,2,8,3)";
const KINK: &str = "X(1,2,2,1)";
const TREFOIL_C5: &str = "X(10,5,1,6) X(6,1,7,2) X(2,7,3,8) X(8,3,9,4) X(9,5,10,4)";

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_turaev"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("stdout is utf8"),
        String::from_utf8(out.stderr).expect("stderr is utf8"),
    )
}

#[test]
fn help_exits_zero() {
    let (code, stdout, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("turaev"));
}

#[test]
fn unknown_subcommand_is_usage_error() {
    let (code, _, _) = run(&["frobnicate", TREFOIL]);
    assert_eq!(code, 2);
}

#[test]
fn bad_pd_is_input_error() {
    let (code, _, stderr) = run(&["jones", "X(1,2,3)"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("bad PD"), "stderr: {stderr}");
}

#[test]
fn missing_input_is_input_error() {
    let (code, _, _) = run(&["jones"]);
    assert_eq!(code, 2);
}

#[test]
fn unreadable_file_is_input_error() {
    let (code, _, _) = run(&["jones", "--file", "/no/such/file.pd"]);
    assert_eq!(code, 2);
}

#[test]
fn inline_pd_conflicts_with_file() {
    let (code, _, _) = run(&["jones", TREFOIL, "--file", "/no/such/file.pd"]);
    assert_eq!(code, 2);
}

#[test]
fn file_input_matches_inline() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("trefoil.pd");
    std::fs::write(&path, TREFOIL).expect("pd written");
    let inline = run(&["jones", TREFOIL]);
    let file = run(&["jones", "--file", path.to_str().expect("utf8 path")]);
    assert_eq!(inline, file);
}

#[test]
fn surgery_without_arcs_fails() {
    let (code, _, stderr) = run(&["surgery", TREFOIL]);
    assert_eq!(code, 1);
    assert!(stderr.contains("no cutting arcs"), "stderr: {stderr}");
}

#[test]
fn surgery_arc_out_of_range_fails() {
    let (code, _, stderr) = run(&["surgery", "--arc", "99", BRAID4]);
    assert_eq!(code, 1);
    assert!(stderr.contains("out of range"), "stderr: {stderr}");
}

#[test]
fn khovanov_over_cap_fails() {
    let (code, _, _) = run(&["khovanov", "--cap", "2", TREFOIL]);
    assert_eq!(code, 1);
}

#[test]
fn pretty_output_is_the_same_object() {
    let (_, compact, _) = run(&["span", TREFOIL]);
    let (_, pretty, _) = run(&["span", "--pretty", TREFOIL]);
    let a: serde_json::Value = serde_json::from_str(&compact).expect("compact json");
    let b: serde_json::Value = serde_json::from_str(&pretty).expect("pretty json");
    assert_eq!(a, b);
}

fn write_catalog(body: &str) -> (tempfile::TempDir, String) {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("catalog.tsv");
    std::fs::write(&path, body).expect("catalog written");
    let p = path.to_str().expect("utf8 path").to_string();
    (dir, p)
}

#[test]
fn missing_catalog_is_input_error() {
    let (code, _, _) = run(&["batch", "/no/such/catalog.tsv"]);
    assert_eq!(code, 2);
}

#[test]
fn empty_catalog_fails() {
    let (_dir, path) = write_catalog("# only comments here\n\n");
    let (code, stdout, _) = run(&["batch", &path]);
    assert_eq!(code, 1);
    let report: serde_json::Value = serde_json::from_str(&stdout).expect("report json");
    assert_eq!(report["summary"]["entries"], 0);
    assert!(!report["diagnostics"].as_array().expect("array").is_empty());
}

#[test]
fn wrong_expectation_fails_batch() {
    let (_dir, path) = write_catalog(&format!("wrong\t{TREFOIL}\t0\t1\n"));
    let (code, stdout, _) = run(&["batch", &path]);
    assert_eq!(code, 1);
    let report: serde_json::Value = serde_json::from_str(&stdout).expect("report json");
    assert_eq!(report["summary"]["fail"], 1);
}

#[test]
fn batch_reports_are_byte_identical_across_runs() {
    let body = format!(
        "a\t{TREFOIL}\t1\t1\nb\t{BRAID4}\t0\t0\nc\t{KINK}\t\t\nd\t{TREFOIL_C5}\t0\t0\n"
    );
    let (_dir, path) = write_catalog(&body);
    let args = ["batch", &path, "--jobs", "2", "--khovanov"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.0, 0, "stderr: {}", first.2);
    assert_eq!(first, second);
}

#[test]
fn timings_are_off_by_default() {
    let (_dir, path) = write_catalog(&format!("a\t{TREFOIL}\t1\t1\n"));
    let (_, plain, _) = run(&["batch", &path]);
    let (_, timed, _) = run(&["batch", &path, "--timings"]);
    assert!(!plain.contains("\"timings\""));
    assert!(timed.contains("\"timings\""));
}
