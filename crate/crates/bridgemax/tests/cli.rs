//! End-to-end tests of the `bridgemax` binary: output formats, round trips,
//! reproducibility and exit codes.

use std::path::Path;
use std::process::{Command, Output};

use bridgemax::format::{batch_from_csv, curve_from_csv, curve_from_json};
use bridgemax::orthopoly::erf;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bridgemax"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn cdf_limit_n1_matches_erf() {
    let out = run(&["cdf", "limit", "--N", "1", "--method", "hermite", "--grid", "0:4:41"]);
    assert!(out.status.success());
    let curve = curve_from_csv(&stdout(&out)).unwrap();
    assert_eq!(curve.grid.len(), 41);
    for (r, v) in curve.grid.iter().zip(&curve.values) {
        assert!((v - erf(r / 2f64.sqrt())).abs() < 1e-10, "r={r}: {v}");
    }
}

#[test]
fn cdf_lue_half_integer_matches_erf() {
    let out = run(&["cdf", "lue", "--m", "1", "--a", "-0.5", "--grid", "0:4:41"]);
    assert!(out.status.success());
    let curve = curve_from_csv(&stdout(&out)).unwrap();
    for (x, v) in curve.grid.iter().zip(&curve.values) {
        assert!((v - erf(x.sqrt())).abs() < 1e-10, "x={x}: {v}");
    }
}

#[test]
fn cdf_limit_methods_agree() {
    let h = run(&["cdf", "limit", "--N", "3", "--method", "hermite"]);
    let l = run(&["cdf", "limit", "--N", "3", "--method", "laguerre"]);
    assert!(h.status.success() && l.status.success());
    let ch = curve_from_csv(&stdout(&h)).unwrap();
    let cl = curve_from_csv(&stdout(&l)).unwrap();
    assert_eq!(ch.grid, cl.grid);
    let worst = ch
        .values
        .iter()
        .zip(&cl.values)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    assert!(worst < 1e-8, "max row difference {worst:.3e}");
}

#[test]
fn cdf_json_round_trips() {
    let out = run(&["cdf", "restricted-max", "--N", "2", "--p", "0.5", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let curve = curve_from_json(&text).unwrap();
    assert_eq!(curve.meta.method, "determinant");
    // Writing to a file produces the same bytes as stdout.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("curve.json");
    let out2 = run(&[
        "cdf", "restricted-max", "--N", "2", "--p", "0.5", "--format", "json",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(out2.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), text);
}

#[test]
fn out_dir_env_var_resolves_relative_paths() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_bridgemax"))
        .args(["cdf", "limit", "--N", "1", "--grid", "0:4:5", "--out", "c.csv"])
        .env("BRIDGEMAX_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.path().join("c.csv").exists());
}

#[test]
fn simulate_is_reproducible() {
    let args = ["simulate", "antige", "--n", "3", "--count", "500", "--seed", "7"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let batch = batch_from_csv(&stdout(&a)).unwrap();
    assert_eq!(batch.n, 500);
    assert_eq!(batch.seed, 7);
    // A different seed changes the draws.
    let c = run(&["simulate", "antige", "--n", "3", "--count", "500", "--seed", "8"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn simulate_wishart_chi_square_mean() {
    let out = run(&["simulate", "wishart", "--N", "1", "--m", "2", "--count", "10000"]);
    assert!(out.status.success());
    let batch = batch_from_csv(&stdout(&out)).unwrap();
    let mean: f64 = batch.values.iter().sum::<f64>() / batch.values.len() as f64;
    // Top eigenvalue of a 1x1 Wishart with m=2 is a chi-square with 2
    // degrees of freedom: mean 2.
    assert!((mean - 2.0).abs() < 0.1, "mean = {mean}");
}

#[test]
fn simulate_nibb_small_run_succeeds() {
    let out = run(&[
        "simulate", "nibb", "--N", "2", "--p", "0.5", "--count", "100", "--steps", "64",
    ]);
    assert!(out.status.success());
    let batch = batch_from_csv(&stdout(&out)).unwrap();
    assert_eq!(batch.n, 100);
    assert!(batch.values.iter().all(|v| *v >= 0.0));
}

#[test]
fn verify_default_passes_and_reports_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&[
        "verify", "--N-max", "4", "--r", "1/2", "--lemma-max", "6", "--aux-max", "5",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "exit {:?}", out.status.code());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let entries = report.as_array().unwrap();
    assert!(!entries.is_empty());
    assert!(entries.iter().all(|e| e["pass"].as_bool().unwrap()));
}

#[test]
fn compare_passes_and_writes_report() {
    let out = run(&["compare", "theorem1", "--N", "2", "--count", "10000", "--seed", "0"]);
    assert!(out.status.success(), "exit {:?}", out.status.code());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report["pass"].as_bool().unwrap());
    assert!(report["ks"].as_f64().unwrap() < 0.02);
}

#[test]
fn compare_failure_exits_one() {
    // An absurd threshold forces a comparison failure (exit 1), distinct
    // from a usage error (exit 2).
    let out = run(&[
        "compare", "theorem1", "--N", "2", "--count", "500", "--seed", "1",
        "--threshold", "1e-9",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["cdf", "limit", "--N", "1", "--grid", "4:0:41"][..], // inverted grid
        &["verify", "--r", "1/0"][..],                         // zero denominator
        &["cdf", "restricted-max", "--N", "2", "--p", "1.5"][..], // p out of range
        &["simulate", "wishart", "--N", "3", "--m", "1"][..],  // m < N
        &["cdf", "lue", "--m", "0", "--a", "0.5"][..],         // m = 0
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
    // Unknown subcommands are clap usage errors.
    let out = run(&["simulate", "nosuchmodel"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn matrix_csv_debug_dump_not_required_but_library_exposed() {
    // The format module's matrix writer is covered in unit tests; here we
    // only confirm the binary exists and prints help.
    let out = run(&["--help"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("cdf"));
    let _ = Path::new("unused");
}
