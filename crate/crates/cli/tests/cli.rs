use std::f64::consts::PI;
use std::process::{Command, Output};

use serde_json::Value;

fn szego(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_szego")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn value0(out: &Output) -> f64 {
    stdout_json(out)["value"][0].as_f64().unwrap()
}

#[test]
fn eval_density_at_one() {
    let out = szego(&["eval", "s", "--n", "1", "--nu", "1,0,0,0"]);
    assert!(out.status.success());
    assert!((value0(&out) - 24.0 / PI.powi(4)).abs() < 1e-15);
    let v = stdout_json(&out);
    assert_eq!(v["n"], 1);
    assert_eq!(v["m"], 4);
}

#[test]
fn eval_cauchy_kernel() {
    let out = szego(&["eval", "E", "--m", "4", "--nu", "1,0,0,0"]);
    assert!(out.status.success());
    assert!((value0(&out) - 1.0 / (2.0 * PI * PI)).abs() < 1e-16);
}

#[test]
fn singular_point_is_an_error() {
    let out = szego(&["eval", "s", "--n", "1", "--nu", "0,0,0,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("singular point"));
}

#[test]
fn eval_kernel_and_projection_agree_on_the_axis() {
    let s = szego(&["eval", "S", "--n", "1", "--q", "0,0,0,0,1,0,0,0", "--omega", "0,0,0,0,0,0,0,0"]);
    let k = szego(&["eval", "K", "--n", "1", "--omega", "0,0,0,0,0,0,0", "--eps", "1"]);
    assert!(s.status.success() && k.status.success());
    assert!((value0(&s) - 24.0 / PI.powi(4)).abs() < 1e-15);
    assert_eq!(value0(&s), value0(&k));
}

#[test]
fn wrong_component_count_is_a_usage_error() {
    let out = szego(&["eval", "s", "--nu", "1,0,0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = szego(&["eval", "s", "--nu", "1,x,0,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_algebra_passes() {
    let out = szego(&["verify", "algebra"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<Value> =
        String::from_utf8(out.stdout).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(!lines.is_empty());
    assert!(lines.iter().all(|r| r["pass"] == true));
    assert!(String::from_utf8_lossy(&out.stderr).contains("0 failed"));
}

#[test]
fn verify_reproducing_passes() {
    let out = szego(&["verify", "reproducing", "--n", "1", "--tol", "1e-3", "--budget", "2e7"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn starved_budget_fails_the_check() {
    let out = szego(&["verify", "reproducing", "--budget", "1000"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_props_is_deterministic() {
    let a = szego(&["verify", "props", "--seed", "7"]);
    let b = szego(&["verify", "props", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn unknown_suite_is_a_usage_error() {
    assert_eq!(szego(&["verify", "everything"]).status.code(), Some(2));
}

#[test]
fn exported_kernel_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s2.json");
    let out = szego(&["export", "kernel", "--n", "2", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let k = szego::kernel::PiScaledKernel::from_json(&v).unwrap();
    let s2 = szego::kernel::szego_density(szego::kernel::KernelOrder::quaternionic(2).unwrap());
    assert!(k.same_function(&s2));
}

#[test]
fn k_decay_table_is_flat() {
    let out = szego(&["export", "table", "--what", "K-decay", "--n", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("rho,absK,absK_times_rho_d"));
    let scaled: Vec<f64> = lines.map(|l| l.split(',').nth(2).unwrap().parse().unwrap()).collect();
    assert!(scaled.len() > 10);
    for v in &scaled {
        assert!((v - scaled[0]).abs() < 1e-12 * scaled[0]);
    }
}

#[test]
fn invalid_output_path_is_an_io_error() {
    let out = szego(&["export", "kernel", "-o", "/nonexistent-dir/s.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "n = 2\nnu = 1,0,0,0\n").unwrap();
    let from_file = szego(&["eval", "s", "--config", cfg.to_str().unwrap()]);
    assert_eq!(stdout_json(&from_file)["n"], 2);
    let flagged = szego(&["eval", "s", "--config", cfg.to_str().unwrap(), "--n", "1"]);
    assert!((value0(&flagged) - 24.0 / PI.powi(4)).abs() < 1e-15);
    let missing = szego(&["eval", "s", "--config", "/nonexistent.cfg", "--nu", "1,0,0,0"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn csv_format() {
    let out = szego(&["eval", "s", "--nu", "1,0,0,0", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("c0,c1,c2,c3\n"));
}
