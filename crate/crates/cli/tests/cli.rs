use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ginalg"))
}

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

const CURVE: &str = "ring x1,x2,x3,x4; char 32003; ideal x3^3 - x1*x4^2, \
    x1^2*x3^2 - x2^3*x4, x2^3*x3 - x1^3*x4, x2^6 - x1^5*x3;";

const TWISTED: &str = "ring x1,x2,x3,x4; char 32003; ideal x1*x3 - x2^2, \
    x1*x4 - x2*x3, x2*x4 - x3^2;";

#[test]
fn invariants_on_inline_curve() {
    let out = bin()
        .args(["invariants", CURVE, "--seed", "5"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("D: 2"));
    assert!(text.contains("M: 3"));
    assert!(text.contains("reg: 6"));
    assert!(text.contains("saturated: true"));
    assert!(text.contains("spor: x2^4, x2^4*x3"));
    assert!(text.contains("gin: (x1^3, x1^2*x2^2, x1*x2^3, x2^5, x2^4*x3^2)"));
}

#[test]
fn hilbert_of_zero_ideal_is_binomial_row() {
    let out = bin()
        .args(["hilbert", "ring x1,x2,x3,x4; char 32003; ideal 0;", "--tmax", "12"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("H:   1 4 10 20 35 56 84 120 165 220 286 364 455"));
    assert!(text.contains("dim: 4"));
}

#[test]
fn json_reports_are_bit_identical_across_runs() {
    let run = || {
        let out = bin()
            .args(["gin", TWISTED, "--json", "--seed", "9", "--trials", "2"])
            .output()
            .unwrap();
        assert!(out.status.success());
        stdout(&out)
    };
    let first = run();
    let second = run();
    assert_eq!(first, second);
    assert!(first.contains("\"agreed\": true"));
    assert!(first.contains("\"seed\": 9"));
    assert!(first.contains("\"field\": \"F_32003\""));
}

#[test]
fn reduction_records_seed_and_value() {
    let out = bin()
        .args(["reduction", TWISTED, "--s", "2", "--seed", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("seed: 3"));
    assert!(text.contains("r_2: 1"));
}

#[test]
fn growth_verbs_run_on_corpus_files() {
    let out = bin()
        .arg("growth1")
        .arg(corpus_dir().join("twisted-cubic.ideal"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("label: twisted cubic"));
    assert!(text.contains("flat degree: 2"));
    assert!(text.contains("flat value s: 3"));

    let out = bin()
        .arg("growth2")
        .arg(corpus_dir().join("plane-quartic.ideal"))
        .args(["--d", "2", "--json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"common_factor\": \"x4\""));
    assert!(text.contains("\"saturated\": true"));
}

#[test]
fn truncate_wlp_and_points_verbs() {
    let out = bin()
        .arg("truncate")
        .arg(corpus_dir().join("twisted-cubic.ideal"))
        .args(["--d", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("generators (3):"));

    let out = bin()
        .arg("wlp")
        .arg(corpus_dir().join("rational-conic.ideal"))
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("wlp: true"));

    let out = bin()
        .args(["points", "6", "--nvars", "3", "--seed", "4"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("h-vector: 1 2 3"));
}

#[test]
fn parse_errors_exit_with_code_two() {
    let out = bin()
        .args(["invariants", "ring x1,x2; char 4; ideal x1;"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["hilbert", "ring x1,x2; char 7; ideal x1 + x2^2;"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn computation_errors_exit_with_code_one() {
    let out = bin()
        .args(["reduction", TWISTED, "--s", "9"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn shipped_corpus_passes() {
    let out = bin().arg("corpus").arg(corpus_dir()).output().unwrap();
    let text = stdout(&out);
    assert!(out.status.success(), "corpus failed:\n{text}");
    assert!(text.contains("13 passed, 0 failed"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn corpus_flags_wrong_expectations() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("bad.ideal"),
        "ring x1,x2,x3,x4; char 32003; label wrong; expect dim = 99;\n\
         ideal x1*x3 - x2^2, x1*x4 - x2*x3, x2*x4 - x3^2;",
    )
    .unwrap();
    let out = bin().arg("corpus").arg(dir.path()).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL wrong"));
    assert!(text.contains("dim: expected 99, got 2"));
}

#[test]
fn empty_corpus_is_a_clean_pass() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin().arg("corpus").arg(dir.path()).output().unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 passed, 0 failed"));
}

#[test]
fn field_flag_overrides_declared_characteristic() {
    let out = bin()
        .args(["invariants", "ring x1,x2,x3; char 32003; ideal x1*x3 - x2^2;", "--field", "Q"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("field: Q"));

    let out = bin()
        .args(["hilbert", "ring x1,x2; char 7; ideal x1^2;", "--field", "6"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
