//! End-to-end tests of the `alphadic` binary.

use std::process::{Command, Output};

fn alphadic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alphadic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = alphadic(args);
    assert!(
        out.status.success(),
        "args {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn renyi_golden() {
    assert_eq!(stdout(&["renyi", "--coeffs", "1,1"]).lines().next(), Some("11"));
}

#[test]
fn beta_expand_four() {
    assert_eq!(stdout(&["beta-expand", "--coeffs", "1,1", "--value", "4"]).trim(), "101.01");
}

#[test]
fn beta_expand_zero() {
    assert_eq!(stdout(&["beta-expand", "--coeffs", "1,1", "--value", "0"]).trim(), "0");
}

#[test]
fn alpha_expand_negative_four() {
    assert_eq!(
        stdout(&["alpha-expand", "--coeffs", "1,1", "--value", "-4"]).trim(),
        "~(10)0100.001"
    );
}

#[test]
fn alpha_expand_coordinate_vector() {
    // 1 + beta has expansion 10.1 at the point: value beta + 1 = beta^2.
    assert_eq!(
        stdout(&["alpha-expand", "--coeffs", "1,1", "--value", "1,1"]).trim(),
        "100"
    );
}

#[test]
fn alpha_enumerate_minus_one() {
    let out = stdout(&["alpha-enumerate", "--coeffs", "1,1", "--value", "-1"]);
    let words: Vec<&str> = out.lines().collect();
    assert_eq!(words, ["~(10)", "~(10)0.1"]);
}

#[test]
fn rational_adic_half_trace() {
    let out = stdout(&["rational-adic", "--a", "3", "--q", "1/2", "--trace"]);
    assert!(out.contains("(-1/2, 3/2)"), "trace shows the recurring state pair:\n{out}");
    assert!(out.trim_end().ends_with("word: ~(012)1"), "{out}");
}

#[test]
fn rational_adic_three_halves() {
    assert_eq!(stdout(&["rational-adic", "--a", "3", "--q", "3/2"]).trim(), "~(012)2");
}

#[test]
fn normalize_golden_word() {
    assert_eq!(
        stdout(&["normalize", "--a", "1", "--C", "4", "--word", "0011"]).trim(),
        "100"
    );
}

#[test]
fn transducer_build_dot_and_json() {
    let dot = stdout(&["transducer", "build", "--a", "3", "--C", "3", "--export", "dot"]);
    assert!(dot.starts_with("digraph"));
    let json = stdout(&["transducer", "build", "--a", "3", "--C", "3", "--export", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert!(v.get("states").is_some());
}

#[test]
fn transducer_run_rewrites() {
    assert_eq!(
        stdout(&["transducer", "run", "--a", "3", "--C", "4", "--word", "33"]).trim(),
        "102"
    );
}

#[test]
fn json_output_round_trips() {
    let out = stdout(&[
        "--format", "json", "alpha-expand", "--coeffs", "1,1", "--value", "-2",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["notation"], "~(10)00.1");
    assert_eq!(v["period"], serde_json::json!([1, 0]));
}

#[test]
fn verify_paper_passes() {
    let out = stdout(&["verify-paper"]);
    assert!(out.contains("0 failure(s)"), "{out}");
    assert!(!out.contains("FAIL "), "{out}");
}

#[test]
fn domain_error_exits_one() {
    let out = alphadic(&["beta-expand", "--coeffs", "1,1", "--value", "-1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error:"));
}

#[test]
fn usage_error_exits_two() {
    let out = alphadic(&["beta-expand", "--value", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = alphadic(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn non_pisot_rejected() {
    let out = alphadic(&["spec-check", "--coeffs", "-1,1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn spec_from_json_file() {
    let dir = std::env::temp_dir().join("alphadic-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("spec.json");
    std::fs::write(&path, "{\"coeffs\":[1,0,1]}").unwrap();
    let out = stdout(&["renyi", "--spec", path.to_str().unwrap()]);
    assert_eq!(out.lines().next(), Some("101"));
}
