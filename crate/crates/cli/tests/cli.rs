// SPDX-License-Identifier: Apache-2.0

//! End-to-end runs of the `qbm` binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const TWO_OSCILLATORS: &str = r#"{
  "central": { "mass_M": 1, "omega_big": 7 },
  "oscillators": [
    { "mass_m": 1, "omega": 5, "coupling_g": 1 },
    { "mass_m": 1, "omega": { "sqrt": 2 }, "coupling_g": 1 }
  ],
  "bath": { "beta": 1 },
  "trajectory": { "y": 1, "y_prime": 0, "phi": 0 }
}"#;

const LATTICE: &str = r#"{
  "central": { "mass_M": 1, "omega_big": 7 },
  "oscillators": [
    { "mass_m": 1, "omega": 5, "coupling_g": 1 },
    { "mass_m": 1, "omega": 3, "coupling_g": 1 }
  ],
  "bath": { "beta": 1 },
  "trajectory": { "y": 1, "y_prime": 0, "phi": 0 }
}"#;

fn qbm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qbm")).args(args).output().expect("binary runs")
}

fn write_config(dir: &Path, text: &str) -> PathBuf {
    let path = dir.join("ensemble.json");
    fs::write(&path, text).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn markers_writes_a_parseable_grid() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path(), TWO_OSCILLATORS);
    let csv = dir.path().join("m.csv");
    let out = qbm(&[
        "markers",
        "--config",
        config.to_str().unwrap(),
        "--grid",
        "11",
        "--t-max",
        "2",
        "--out",
        csv.to_str().unwrap(),
        "--svg",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "t,gamma2_k1,gamma2_k2,overlap_k1,overlap_k2,gamma2_total,overlap_total"
    );
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|v| v.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 11);
    assert_eq!(rows[0][5], 1.0);
    for r in &rows {
        assert!((r[5] - r[1] * r[2]).abs() < 1e-15);
        assert!(r[6] >= r[5]);
    }
    assert!(dir.path().join("m.svg").exists());
}

#[test]
fn markers_to_stdout_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path(), LATTICE);
    let args = ["markers", "--config", config.to_str().unwrap(), "--grid", "50"];
    assert_eq!(stdout(&qbm(&args)), stdout(&qbm(&args)));
}

#[test]
fn fraction_reports_lattice_and_reals() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path(), TWO_OSCILLATORS);
    let out = qbm(&["fraction", "--config", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("5/7 OddOdd t_min=π"), "{text}");
    assert!(text.contains("common recurrence: none"), "{text}");

    let config = write_config(dir.path(), LATTICE);
    let csv = dir.path().join("f.csv");
    let out = qbm(&["fraction", "--config", config.to_str().unwrap(), "--out", csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let table = fs::read_to_string(csv).unwrap();
    assert!(table.starts_with("k,omega,ratio,fraction,parity,t_min,status"));
    assert_eq!(table.lines().count(), 3);
}

#[test]
fn figure_writes_csv_and_metadata() {
    let dir = tempfile::tempdir().unwrap();
    let out = qbm(&["figure", "fig2", "--out", dir.path().to_str().unwrap(), "--grid", "200"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = fs::read_to_string(dir.path().join("fig2.csv")).unwrap();
    assert_eq!(csv.lines().count(), 201);
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("fig2.meta.json")).unwrap()).unwrap();
    assert!(meta.is_object());
}

#[test]
fn phase_figure_writes_sweep_and_markers() {
    let dir = tempfile::tempdir().unwrap();
    let out = qbm(&["figure", "fig6", "--out", dir.path().to_str().unwrap(), "--grid", "300"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let sweep = fs::read_to_string(dir.path().join("fig6.csv")).unwrap();
    assert!(sweep.starts_with("t,eta_bar2_phi_0,"));
    assert!(dir.path().join("fig6_markers.csv").exists());
}

#[test]
fn oracle_random_draws_pass() {
    let out = qbm(&["oracle", "--draws", "3", "--seed", "11"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",PASS")));
}

#[test]
fn oracle_on_a_tiny_truncation_fails_with_a_diagnosis() {
    let out = qbm(&["oracle", "--draws", "2", "--dim", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("truncation at dim=3"));
}

#[test]
fn oracle_that_cannot_converge_exits_three() {
    let out = qbm(&["oracle", "--draws", "3", "--max-dim", "20", "--tol", "1e-15"]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn phase_reports_the_bound() {
    let out = qbm(&["phase", "--omega", "1.7320508075688772", "--omega-big", "2.23606797749979", "--t-max", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("bound 4*max(1, Omega^2/omega^2)"));
}

#[test]
fn usage_and_configuration_errors_exit_two() {
    assert_eq!(qbm(&["figure", "fig9"]).status.code(), Some(2));
    assert_eq!(qbm(&["markers", "--config", "/no/such/file.json"]).status.code(), Some(2));
    assert_eq!(qbm(&["bogus"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path(), "{ not json");
    assert_eq!(qbm(&["fraction", "--config", config.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn invalid_time_range_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path(), LATTICE);
    let out = qbm(&["markers", "--config", config.to_str().unwrap(), "--t-min", "3", "--t-max", "1"]);
    assert_ne!(out.status.code(), Some(0));
}
