//! Pins the exact bytes each subcommand prints. Run with UPDATE_GOLDEN=1
//! to reseed the expected files after an intentional output change.

use std::path::PathBuf;
use std::process::Command;

const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const BRAID4: &str = "X(8,5,1,6) X(3,6,4,7) X(4,1,5,2) X(7,2,8,3)";

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

fn assert_golden(name: &str, stdout: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, stdout).expect("golden file written");
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| {
        panic!("{name}: cannot read golden file ({e}); seed with UPDATE_GOLDEN=1")
    });
    assert_eq!(
        stdout, want,
        "{name}: output drifted; reseed with UPDATE_GOLDEN=1 if intentional"
    );
}

fn golden(name: &str, args: &[&str]) {
    let (code, stdout, stderr) = run(args);
    assert_eq!(code, 0, "{name}: exit {code}, stderr: {stderr}");
    assert_golden(name, &stdout);
}

/// The genus report is the one shape other tooling greps for; pin it
/// byte for byte, golden file aside.
#[test]
fn genus_shape_is_pinned() {
    let (code, stdout, _) = run(&["genus", TREFOIL]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "{\"c\":3,\"sA\":2,\"sB\":3,\"genus\":0}\n");
}

#[test]
fn genus_trefoil() {
    golden("genus_trefoil.json", &["genus", TREFOIL]);
}

#[test]
fn genus_trefoil_pretty() {
    golden("genus_trefoil_pretty.json", &["genus", "--pretty", TREFOIL]);
}

#[test]
fn parse_trefoil() {
    golden("parse_trefoil.json", &["parse", TREFOIL]);
}

#[test]
fn adequacy_trefoil() {
    golden("adequacy_trefoil.json", &["adequacy", TREFOIL]);
}

#[test]
fn jones_trefoil() {
    golden("jones_trefoil.json", &["jones", TREFOIL]);
}

#[test]
fn span_trefoil() {
    golden("span_trefoil.json", &["span", TREFOIL]);
}

#[test]
fn ribbon_trefoil() {
    golden("ribbon_trefoil.json", &["ribbon", TREFOIL]);
}

#[test]
fn tutte_trefoil() {
    golden("tutte_trefoil.json", &["tutte", TREFOIL]);
}

#[test]
fn br_trefoil() {
    golden("br_trefoil.json", &["br", TREFOIL]);
}

#[test]
fn khovanov_trefoil_rational() {
    golden("khovanov_trefoil_q.json", &["khovanov", TREFOIL]);
}

#[test]
fn khovanov_trefoil_mod2() {
    golden("khovanov_trefoil_f2.json", &["khovanov", "--field", "f2", TREFOIL]);
}

#[test]
fn decompose_genus_one_braid() {
    golden("decompose_braid4.json", &["decompose", BRAID4]);
}

#[test]
fn surgery_genus_one_braid() {
    golden("surgery_braid4.json", &["surgery", BRAID4]);
}

#[test]
fn batch_two_entry_catalog() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("mini.tsv");
    std::fs::write(
        &path,
        format!("# name pd alternating adequate\n3_1\t{TREFOIL}\t1\t1\nbraid4\t{BRAID4}\t0\t0\n"),
    )
    .expect("catalog written");
    let (code, stdout, stderr) = run(&[
        "batch",
        path.to_str().expect("utf8 path"),
        "--khovanov",
        "--pretty",
    ]);
    assert_eq!(code, 0, "batch exit {code}, stderr: {stderr}");
    assert_golden("batch_mini.json", &stdout);
}
