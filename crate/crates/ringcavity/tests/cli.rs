//! End-to-end tests of the installed binary: exit codes, report layout,
//! sweep file formats, and byte-level reproducibility from the manifest.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ringcavity"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

/// Value printed on a `key = number` report line.
fn report_value(text: &str, key: &str) -> f64 {
    let line = text
        .lines()
        .find(|l| l.trim_start().starts_with(&format!("{key} = ")))
        .unwrap_or_else(|| panic!("report line for {key} missing in:\n{text}"));
    line.split('=').nth(1).unwrap().trim().parse().unwrap()
}

fn write_config(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn point_without_config_reports_shipped_defaults() {
    let out = run(&["point"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("stability: stable"));
    for label in [
        "E_m1_m2", "E_m1_op", "E_m2_op", "E_m1_a", "E_m2_a", "E_op_a", "T_m1m2a", "T_am1op",
        "T_m1m2op",
    ] {
        assert!(text.contains(label), "missing {label} in:\n{text}");
    }
    let e_m1_a = report_value(&text, "E_m1_a");
    let expected = 0.10684390955902191; // independent dense-solver oracle
    assert!(
        (e_m1_a - expected).abs() <= 1e-8 * expected,
        "E_m1_a = {e_m1_a}, expected ~{expected}"
    );
    assert!(report_value(&text, "lyapunov residual") <= 1e-9);
}

#[test]
fn point_with_explicit_shipped_config_matches_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_config(dir.path(), "shipped.cfg", ringcavity::config::DEFAULT_CONFIG);
    let explicit = run(&["point", "--config", &path]);
    let implicit = run(&["point"]);
    assert_eq!(explicit.status.code(), Some(0));
    assert_eq!(stdout(&explicit), stdout(&implicit));
}

#[test]
fn invalid_config_exits_one_and_names_the_key() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_config(dir.path(), "bad.cfg", "temperature_k = -1.0\n");
    let out = run(&["point", "--config", &path]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr(&out).contains("temperature_k"),
        "stderr: {}",
        stderr(&out)
    );
}

#[test]
fn missing_config_file_exits_one() {
    let out = run(&["point", "--config", "/nonexistent/nowhere.cfg"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("nowhere.cfg"), "stderr: {}", stderr(&out));
}

#[test]
fn unstable_point_exits_two_without_entanglement_lines() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_config(dir.path(), "unstable.cfg", "delta_over_omega_m = -1.0\n");
    let out = run(&["point", "--config", &path]);
    assert_eq!(out.status.code(), Some(2), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("stability: unstable"));
    assert!(!text.contains("E_m1_a"), "unexpected negativity in:\n{text}");
}

const SWEEP_CONFIG: &str = "\
squeeze_r = 0.1
sweep_axis = T
sweep_min = 1e-5
sweep_max = 8e-4
sweep_count = 20
sweep_quantities = E_m1_op, T_am1op
";

#[test]
fn sweep_writes_csv_and_manifest_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "sweep.cfg", SWEEP_CONFIG);
    let out_path = dir.path().join("run.csv");
    let out_str = out_path.to_str().unwrap();

    let out = run(&["sweep", "--config", &cfg, "--out", out_str]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("20 rows"));

    let csv = std::fs::read_to_string(&out_path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("axis,E_m1_op,T_am1op,stable"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 20);
    for row in &rows {
        assert_eq!(row.split(',').count(), 4);
        assert!(row.ends_with(",true"));
    }

    let manifest_path = dir.path().join("run.manifest.json");
    let manifest: Value =
        serde_json::from_str(&std::fs::read_to_string(&manifest_path).unwrap()).unwrap();
    assert_eq!(manifest["sweep"]["axis"], "T");
    assert_eq!(manifest["sweep"]["count"], 20);
    assert_eq!(manifest["params"]["squeeze_r"].as_f64(), Some(0.1));

    // rerun: identical bytes apart from the recorded wall-clock duration
    let rerun_path = dir.path().join("rerun.csv");
    let rerun = run(&["sweep", "--config", &cfg, "--out", rerun_path.to_str().unwrap()]);
    assert_eq!(rerun.status.code(), Some(0));
    assert_eq!(csv, std::fs::read_to_string(&rerun_path).unwrap());
    let mut m1 = manifest;
    let mut m2: Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("rerun.manifest.json")).unwrap(),
    )
    .unwrap();
    m1["duration_s"] = Value::Null;
    m2["duration_s"] = Value::Null;
    assert_eq!(m1, m2);
}

#[test]
fn manifest_reconstructs_the_run_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "sweep.cfg", SWEEP_CONFIG);
    let first = dir.path().join("first.csv");
    let out = run(&["sweep", "--config", &cfg, "--out", first.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));

    let manifest: Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("first.manifest.json")).unwrap(),
    )
    .unwrap();

    // rebuild a config purely from the manifest
    let mut body = String::new();
    for (key, value) in manifest["params"].as_object().unwrap() {
        body.push_str(&format!("{key} = {}\n", value.as_f64().unwrap()));
    }
    let sweep = manifest["sweep"].as_object().unwrap();
    body.push_str(&format!("sweep_axis = {}\n", sweep["axis"].as_str().unwrap()));
    body.push_str(&format!("sweep_min = {}\n", sweep["min"].as_f64().unwrap()));
    body.push_str(&format!("sweep_max = {}\n", sweep["max"].as_f64().unwrap()));
    body.push_str(&format!("sweep_count = {}\n", sweep["count"]));
    body.push_str(&format!("sweep_scale = {}\n", sweep["scale"].as_str().unwrap()));
    body.push_str(&format!("normalize_axis = {}\n", sweep["normalize_axis"]));
    let labels: Vec<&str> = sweep["quantities"]
        .as_array()
        .unwrap()
        .iter()
        .map(|q| q.as_str().unwrap())
        .collect();
    body.push_str(&format!("sweep_quantities = {}\n", labels.join(",")));

    let rebuilt_cfg = write_config(dir.path(), "rebuilt.cfg", &body);
    let second = dir.path().join("second.csv");
    let out = run(&["sweep", "--config", &rebuilt_cfg, "--out", second.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));

    assert_eq!(
        std::fs::read_to_string(&first).unwrap(),
        std::fs::read_to_string(&second).unwrap()
    );
}

#[test]
fn sweep_json_format_is_valid_and_labeled() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "sweep.cfg", SWEEP_CONFIG);
    let out_path = dir.path().join("run.json");
    let out = run(&[
        "sweep",
        "--config",
        &cfg,
        "--out",
        out_path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));

    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(doc["axis"], "T");
    let labels: Vec<&str> = doc["labels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l.as_str().unwrap())
        .collect();
    assert_eq!(labels, ["E_m1_op", "T_am1op"]);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 20);
    assert!(rows.iter().all(|r| r["stable"] == Value::Bool(true)));
    assert_eq!(rows[0]["values"].as_array().unwrap().len(), 2);
}

#[test]
fn sweep_without_sweep_keys_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "point.cfg", "squeeze_r = 0.1\n");
    let out_path = dir.path().join("run.csv");
    let out = run(&["sweep", "--config", &cfg, "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("sweep"), "stderr: {}", stderr(&out));
}

#[test]
fn usage_errors_exit_one_and_help_exits_zero() {
    assert_eq!(run(&["sweep"]).status.code(), Some(1)); // missing required args
    assert_eq!(run(&["bogus"]).status.code(), Some(1)); // unknown subcommand
    assert_eq!(run(&["point", "--bogus"]).status.code(), Some(1));

    let help = run(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    let text = stdout(&help);
    assert!(text.contains("point") && text.contains("sweep"));
}
