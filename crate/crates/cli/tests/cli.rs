use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tensorfield"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn default_suite_passes() {
    let o = run(&["verify"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.lines().last().unwrap().contains(" 0 failed"));
    assert!(!text.contains("[FAIL]"));
}

#[test]
fn same_seed_gives_identical_json() {
    let a = run(&["verify", "--json", "--seed", "42"]);
    let b = run(&["verify", "--json", "--seed", "42"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["config"]["seed"], 42);
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn different_seeds_sample_different_momenta() {
    let a = run(&["verify", "--json", "--seed", "1", "--samples", "5"]);
    let b = run(&["verify", "--json", "--seed", "2", "--samples", "5"]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn impossible_tolerance_fails_checks() {
    let o = run(&["verify", "--tol", "1e-30", "--samples", "5"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stdout).contains("[FAIL]"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        code(&run(&["polarization", "--p", "1,2", "--m", "1", "--sigma", "+1"])),
        2
    );
    assert_eq!(
        code(&run(&["polarization", "--p", "0,0,1", "--m", "1", "--sigma", "7"])),
        2
    );
    assert_eq!(code(&run(&["verify", "--norm", "sideways"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn domain_errors_exit_three() {
    assert_eq!(
        code(&run(&["polarization", "--p", "0,0,1", "--m", "0", "--sigma", "+1"])),
        3
    );
    assert_eq!(code(&run(&["limit", "--p", "0,0,0", "--sigma", "0"])), 3);
    assert_eq!(code(&run(&["verify", "--samples", "0"])), 3);
}

#[test]
fn unwritable_output_exits_four() {
    let o = run(&["verify", "--samples", "2", "--output", "/nonexistent-dir/report.txt"]);
    assert_eq!(code(&o), 4);
}

#[test]
fn output_file_matches_stdout() {
    let path = scratch("report.json");
    let _ = std::fs::remove_file(&path);
    let o = run(&["verify", "--json", "--samples", "3", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    let direct = run(&["verify", "--json", "--samples", "3"]);
    assert_eq!(written, direct.stdout);
}

#[test]
fn longitudinal_polarization_along_z() {
    let o = run(&[
        "polarization",
        "--p",
        "0,0,2",
        "--m",
        "1",
        "--sigma",
        "0",
        "--norm",
        "mass",
        "--json",
    ]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let u: Vec<f64> = (0..4).map(|i| v["u"][i][0].as_f64().unwrap()).collect();
    let e = 5f64.sqrt();
    for (a, b) in u.iter().zip([2.0, 0.0, 0.0, e]) {
        assert!((a - b).abs() < 1e-12);
    }
    assert!(v["max_abs_diff"].as_f64().unwrap() < 1e-12);
}

#[test]
fn notoph_ratio_is_minus_i_over_n() {
    for (norm, n) in [("unit", 1.0), ("mass", 0.7)] {
        let o = run(&["notoph", "--p", "0.3,-0.4,1", "--m", "0.7", "--norm", norm, "--json"]);
        assert_eq!(code(&o), 0);
        let v = json(&o);
        let (re, im) = (v["ratio"][0].as_f64().unwrap(), v["ratio"][1].as_f64().unwrap());
        assert!(re.abs() < 1e-12 && (im + 1.0 / n).abs() < 1e-12, "{norm}: {re} {im}");
    }
}

#[test]
fn transverse_limit_along_z_vanishes() {
    let o = run(&["limit", "--p", "0,0,2", "--sigma", "+1", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    for c in ["u0", "u1", "u2", "u3"] {
        let verdict = v["u"][c]["verdict"].as_str().unwrap();
        assert!(verdict == "vanishes" || verdict == "identically_zero", "{c}: {verdict}");
    }
}

#[test]
fn unit_normalized_limit_diverges() {
    let o = run(&[
        "limit",
        "--p",
        "0.5,-0.7,1.1",
        "--sigma",
        "0",
        "--norm",
        "unit",
        "--json",
    ]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let any = ["u0", "u1", "u2", "u3"]
        .iter()
        .any(|c| v["u"][*c]["verdict"] == "diverges");
    assert!(any);
}

#[test]
fn text_output_is_readable() {
    let o = run(&["spin", "--p", "0.1,0.2,0.3", "--m", "1", "--sigma", "+1"]);
    assert_eq!(code(&o), 0);
    assert!(!o.stdout.is_empty());
    let o = run(&[
        "strengths",
        "--p",
        "0.1,0.2,0.3",
        "--m",
        "1",
        "--sigma",
        "-1",
        "--phase",
        "-0.4",
    ]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).contains('i'));
}
