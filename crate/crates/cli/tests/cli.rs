//! End-to-end checks of the `glant` binary: exit codes, formats, and the
//! simulate -> detect -> render pipeline.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn glant(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glant"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn simulate_then_detect_finds_period_52() {
    let dir = tempfile::tempdir().unwrap();
    let out = glant(
        &["simulate", "--rule", "LLLR", "--uniform", "--steps", "313", "--out", "run.json"],
        dir.path(),
    );
    assert!(out.status.success());
    let out = glant(&["detect", "--in", "run.json"], dir.path());
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["period"], 52);
    assert_eq!(report["classification"], "LLLR-simple-52");
}

#[test]
fn simulate_zero_steps_and_bad_rule() {
    let dir = tempfile::tempdir().unwrap();
    let out = glant(
        &["simulate", "--rule", "LLLR", "--uniform", "--steps", "0"],
        dir.path(),
    );
    assert!(out.status.success());
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(record["trace"].as_array().unwrap().len(), 0);

    let out = glant(
        &["simulate", "--rule", "LXR", "--uniform", "--steps", "3"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains('X'));
}

#[test]
fn unreadable_pattern_is_invalid_input() {
    let dir = tempfile::tempdir().unwrap();
    let out = glant(
        &["simulate", "--rule", "LLLR", "--pattern", "missing.txt", "--steps", "5"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));

    fs::write(dir.path().join("bad.txt"), "1 1 0 0\n7\n").unwrap();
    let out = glant(
        &["simulate", "--rule", "LLLR", "--pattern", "bad.txt", "--steps", "5"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn detect_none_is_success_and_missing_input_is_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = glant(
        &["detect", "--rule", "LLLR", "--uniform", "--steps", "50"],
        dir.path(),
    );
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "none");

    let out = glant(&["detect", "--in", "missing.json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn detect_inline_lr_run() {
    let dir = tempfile::tempdir().unwrap();
    let out = glant(
        &["detect", "--rule", "LR", "--uniform", "--steps", "13000"],
        dir.path(),
    );
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["period"], 104);
    assert_eq!(report["classification"], "LR-104");
}

#[test]
fn experiment_csv_shape() {
    let dir = tempfile::tempdir().unwrap();
    let out = glant(
        &[
            "experiment", "--rule", "LLLR", "--trials", "20", "--horizon", "50000",
            "--master-seed", "1", "--out", "exp.csv",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let csv = fs::read_to_string(dir.path().join("exp.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "trial,label,entry_step,period,drift_a,drift_b"
    );
    let rows: Vec<&str> = csv.lines().filter(|l| !l.starts_with('#')).skip(1).collect();
    assert_eq!(rows.len(), 20);
    assert!(csv.lines().any(|l| l.starts_with("# rule=LLLR")));
}

#[test]
fn experiment_zero_trials_header_only() {
    let dir = tempfile::tempdir().unwrap();
    let out = glant(
        &["experiment", "--rule", "LLLR", "--trials", "0", "--out", "exp.csv"],
        dir.path(),
    );
    assert!(out.status.success());
    let csv = fs::read_to_string(dir.path().join("exp.csv")).unwrap();
    assert!(csv.starts_with("trial,label,entry_step,period,drift_a,drift_b\n"));
    assert!(csv.lines().skip(1).all(|l| l.starts_with('#')));
}

#[test]
fn experiment_writes_anomaly_overflow_for_uncataloged_highways() {
    let dir = tempfile::tempdir().unwrap();
    // LLLLLR highways are not in the shipped catalog, so every detected
    // trial is an anomaly with a full report.
    let out = glant(
        &[
            "experiment", "--rule", "LLLLLR", "--trials", "3", "--horizon", "100000",
            "--master-seed", "2", "--out", "exp.csv",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let lines = fs::read_to_string(dir.path().join("exp.csv.anomalies.jsonl")).unwrap();
    assert_eq!(lines.lines().count(), 3);
    let first: serde_json::Value = serde_json::from_str(lines.lines().next().unwrap()).unwrap();
    assert_eq!(first["label"], "unknown(period=84)");
    assert_eq!(first["report"]["period"], 84);
}

#[test]
fn render_produces_a_ppm() {
    let dir = tempfile::tempdir().unwrap();
    let out = glant(
        &[
            "render", "--rule", "LLLR", "--uniform", "--steps", "313",
            "--scale", "2", "--out", "img.ppm",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let bytes = fs::read(dir.path().join("img.ppm")).unwrap();
    assert!(bytes.starts_with(b"P6\n"));
    let header = String::from_utf8_lossy(&bytes[..20]).to_string();
    let dims: Vec<usize> = header
        .lines()
        .nth(1)
        .unwrap()
        .split(' ')
        .map(|t| t.parse().unwrap())
        .collect();
    let header_len = bytes.iter().enumerate().filter(|(_, &b)| b == b'\n').nth(2).unwrap().0 + 1;
    assert_eq!(bytes.len(), header_len + 3 * dims[0] * dims[1]);
}

#[test]
fn render_fixed_viewport_is_bit_exact() {
    let dir = tempfile::tempdir().unwrap();
    // One step: cell (0,0)=1, ant at (-1,0). Viewport covers only (1,1).
    let out = glant(
        &[
            "render", "--rule", "LLLR", "--uniform", "--steps", "1",
            "--scale", "1", "--viewport", "1", "1", "1", "1", "--out", "img.ppm",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    assert_eq!(fs::read(dir.path().join("img.ppm")).unwrap(), b"P6\n1 1\n255\n\xFF\xFF\xFF");
}

#[test]
fn catalog_list_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let out = glant(&["catalog", "--list"], dir.path());
    assert!(out.status.success());
    let listed = stdout(&out);
    assert!(listed.lines().count() >= 7);
    assert!(listed.contains("LLLR-simple-52"));

    let out = glant(&["catalog", "--verify"], dir.path());
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("LLLR-simple-52: period 52 word ok (length 52"));
    assert!(text.contains("LLLR-complex-156: period 156 word ok (length 156"));

    fs::write(dir.path().join("empty.txt"), "# no entries\n").unwrap();
    let out = glant(&["catalog", "--verify", "--file", "empty.txt"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flags_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let out = glant(&["simulate", "--rule", "LLLR", "--uniform", "--steps", "1", "--bogus"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}
