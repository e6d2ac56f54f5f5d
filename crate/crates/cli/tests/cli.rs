use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn scramble(dir: &Path, args: &[&str], workers: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_scramble"));
    cmd.current_dir(dir).args(args).env_remove("SCRAMBLE_WORKERS");
    if let Some(w) = workers {
        cmd.env("SCRAMBLE_WORKERS", w);
    }
    cmd.output().expect("binary runs")
}

fn write_config(dir: &Path, name: &str, body: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn syk_config(n_majorana: usize, q: usize, grid: &str) -> String {
    format!(
        r#"{{
  "kind": "syk",
  "partition": {{"n_a": 1, "n_b": {}}},
  "time_grid": {grid},
  "syk": {{"n_majorana": {n_majorana}, "q": {q}, "j_squared": 2.0, "realizations": 4}},
  "output": "out/syk",
  "seed": 11
}}"#,
        (n_majorana / 2).saturating_sub(1).max(1)
    )
}

const GRID: &str = r#"{"start": 0.0, "stop": 2.0, "samples": 9}"#;

const ISING_SWEEP: &str = r#"{
  "kind": "otoc-sweep",
  "partition": {"n_a": 1, "n_b": 2},
  "time_grid": {"start": 0.0, "stop": 1.0, "samples": 11},
  "hamiltonian": {"model": "ising_chain", "n_qubits": 3, "coupling": 1.0, "field": 0.9},
  "output": "out/ising"
}"#;

#[test]
fn runs_are_bitwise_identical_across_worker_counts() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), "syk.json", &syk_config(8, 4, GRID));
    let cfg = cfg.to_str().unwrap();
    let one = scramble(dir.path(), &["run", cfg, "--output", "w1"], Some("1"));
    let two = scramble(dir.path(), &["run", cfg, "--output", "w2"], Some("2"));
    assert!(one.status.success(), "{}", stderr(&one));
    assert!(two.status.success(), "{}", stderr(&two));
    let a = fs::read(dir.path().join("w1.csv")).unwrap();
    let b = fs::read(dir.path().join("w2.csv")).unwrap();
    assert_eq!(a, b);
    let summary: Value = serde_json::from_slice(&fs::read(dir.path().join("w2.json")).unwrap()).unwrap();
    assert_eq!(summary["workers"], 2);
    assert_eq!(summary["seeds"]["base"], 11);
    assert_eq!(summary["seeds"]["realizations"], 4);
}

#[test]
fn slack_column_is_information_minus_otoc_decay() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), "syk.json", &syk_config(8, 4, GRID));
    let out = scramble(dir.path(), &["run", cfg.to_str().unwrap()], Some("1"));
    assert!(out.status.success(), "{}", stderr(&out));
    let mut reader = csv::Reader::from_path(dir.path().join("out/syk.csv")).unwrap();
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["t", "I", "I2", "Obar", "deltaO", "slack9"]);
    let mut rows = 0;
    for rec in reader.records() {
        let v: Vec<f64> = rec.unwrap().iter().map(|x| x.parse().unwrap()).collect();
        assert!((v[5] - (v[1] - v[4])).abs() <= 1e-12);
        assert!((v[4] - (1.0 - v[3])).abs() <= 1e-12);
        rows += 1;
    }
    assert_eq!(rows, 9);
}

#[test]
fn empty_time_grid_is_a_config_error() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), "c.json", &syk_config(8, 4, r#"{"times": []}"#));
    let out = scramble(dir.path(), &["run", cfg.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("time_grid"), "{}", stderr(&out));
}

#[test]
fn odd_majorana_count_is_a_config_error() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), "c.json", &syk_config(7, 4, GRID));
    let out = scramble(dir.path(), &["validate", cfg.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("even"), "{}", stderr(&out));
}

#[test]
fn interaction_order_above_majorana_count_is_a_config_error() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), "c.json", &syk_config(4, 6, GRID));
    let out = scramble(dir.path(), &["validate", cfg.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("exceed"), "{}", stderr(&out));
}

#[test]
fn malformed_json_reports_its_location() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), "c.json", "{\n  \"kind\": \"syk\",,\n}");
    let out = scramble(dir.path(), &["validate", cfg.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));
}

#[test]
fn zero_workers_is_a_config_error() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), "c.json", &syk_config(8, 4, GRID));
    let out = scramble(dir.path(), &["run", cfg.to_str().unwrap()], Some("0"));
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("SCRAMBLE_WORKERS"), "{}", stderr(&out));
}

#[test]
fn valid_config_validates() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), "c.json", &syk_config(8, 4, GRID));
    let out = scramble(dir.path(), &["validate", cfg.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(String::from_utf8_lossy(&out.stdout).contains("kind syk"));
}

#[test]
fn violated_bound_exits_with_assertion_code_and_names_the_sample() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), "ising.json", ISING_SWEEP);
    let out = scramble(dir.path(), &["run", cfg.to_str().unwrap()], Some("1"));
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
    let err = stderr(&out);
    assert!(err.contains("slack9 violated at sample 1"), "{err}");
    let summary: Value =
        serde_json::from_slice(&fs::read(dir.path().join("out/ising.json")).unwrap()).unwrap();
    assert_eq!(summary["first_violation"]["index"], 1);
    assert!(summary["violations"]["slack9"].as_u64().unwrap() > 0);
}

#[test]
fn presets_list_shows_every_shipped_config() {
    let dir = TempDir::new().unwrap();
    let out = scramble(dir.path(), &["presets", "list"], None);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    for name in ["scrambler-circuit", "syk-plateau", "entropy-bound-syk"] {
        assert!(text.contains(&format!("# {name}:")), "{text}");
    }
}

#[test]
fn written_presets_validate() {
    let dir = TempDir::new().unwrap();
    let out = scramble(dir.path(), &["presets", "write", "cfg"], None);
    assert!(out.status.success(), "{}", stderr(&out));
    for entry in fs::read_dir(dir.path().join("cfg")).unwrap() {
        let path = entry.unwrap().path();
        let out = scramble(dir.path(), &["validate", path.to_str().unwrap()], None);
        assert!(out.status.success(), "{}: {}", path.display(), stderr(&out));
    }
}

#[test]
fn unknown_preset_is_a_config_error() {
    let dir = TempDir::new().unwrap();
    let out = scramble(dir.path(), &["presets", "show", "nope"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("syk-plateau"));
}
