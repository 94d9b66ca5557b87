//! End-to-end tests of the command-line surface: exit codes, byte-level
//! determinism, wire formats, and the published JSON shape.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_confarc")
}

fn write_spec(name: &str, body: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("confarc-test-{name}-{}.json", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

fn helix_spec() -> PathBuf {
    write_spec("helix", r#"{"kind":"helix","a":1.0,"b":1.0,"domain":[0.0,6.283185307179586]}"#)
}

#[test]
fn malformed_spec_exits_2() {
    let path = write_spec("bad", "{ not json");
    let out = run(&["invariants", "--curve", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty(), "diagnostics belong on stderr");
}

#[test]
fn missing_curve_flag_exits_2() {
    let out = run(&["invariants"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invariants_on_the_helix_accumulate_the_known_length() {
    let path = helix_spec();
    let out = run(&["invariants", "--curve", path.to_str().unwrap(), "--samples", "100"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("t,s,rho,drho_dt,kappa,tau,conformal_torsion,is_vertex"));
    let rho_total: f64 = text
        .lines()
        .find(|l| l.starts_with("# rho_total"))
        .and_then(|l| l.split(',').nth(1))
        .unwrap()
        .parse()
        .unwrap();
    let expected = std::f64::consts::PI * 2.0f64.sqrt();
    assert!((rho_total - expected).abs() < 1e-6, "rho_total {rho_total}");
}

#[test]
fn invariants_on_a_circle_report_vertices_and_zero_length() {
    let path = write_spec("circle", r#"{"kind":"circle","r":1.0}"#);
    let out = run(&["invariants", "--curve", path.to_str().unwrap(), "--samples", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for line in text.lines().skip(1).filter(|l| !l.starts_with('#')) {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells[7], "true", "every circle point is a vertex: {line}");
        let rho: f64 = cells[2].parse().unwrap();
        assert!(rho.abs() < 1e-9, "rho stays zero: {line}");
        assert_eq!(cells[6], "nan", "conformal torsion undefined at vertices");
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let path = helix_spec();
    for format in ["csv", "json"] {
        let args = [
            "check",
            "--curve",
            path.to_str().unwrap(),
            "--seed",
            "7",
            "--format",
            format,
        ];
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first.status.code(), Some(0));
        assert_eq!(first.stdout, second.stdout, "{format} output must be deterministic");
    }
}

#[test]
fn check_passes_on_the_helix_and_fails_the_negative_control() {
    let path = helix_spec();
    let ok = run(&["check", "--curve", path.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
    let corrupted = run(&["check", "--curve", path.to_str().unwrap(), "--corrupt-signature"]);
    assert_eq!(corrupted.status.code(), Some(1), "corrupted signature must fail the identity");
    let text = String::from_utf8(corrupted.stdout).unwrap();
    assert!(text.contains("arclength_identity,fail"));
}

#[test]
fn check_on_a_circle_skips_rather_than_fails() {
    let path = write_spec("circle-check", r#"{"kind":"circle","r":2.0}"#);
    let out = run(&["check", "--curve", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains(",skip,"), "vertex-dependent checks report skip");
    assert!(!text.contains(",fail,"));
}

#[test]
fn halfmeasure_reports_convergence() {
    let path = helix_spec();
    let out = run(&["halfmeasure", "--curve", path.to_str().unwrap(), "--samples", "256"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rel: f64 = text
        .lines()
        .find(|l| l.starts_with("# rel_defect"))
        .and_then(|l| l.split(',').nth(1))
        .unwrap()
        .parse()
        .unwrap();
    assert!(rel < 1e-3, "final relative defect {rel}");
    let order: f64 = text
        .lines()
        .find(|l| l.starts_with("# fitted_order"))
        .and_then(|l| l.split(',').nth(1))
        .unwrap()
        .parse()
        .unwrap();
    assert!(order >= 0.9, "fitted order {order}");
}

#[test]
fn halfmeasure_survives_a_vertex_in_range() {
    // quarter-to-quarter ellipse arc through the vertex at t = 0
    let path = write_spec("ellipse", r#"{"kind":"ellipse","a":2.0,"b":1.0,"domain":[-0.7,0.7]}"#);
    let out = run(&["halfmeasure", "--curve", path.to_str().unwrap(), "--samples", "64"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for line in text.lines().skip(1).filter(|l| !l.starts_with('#')) {
        for cell in line.split(',') {
            let v: f64 = cell.parse().unwrap();
            assert!(v.is_finite(), "non-finite output near the vertex: {line}");
        }
    }
}

#[test]
fn export_embedding_uses_the_wire_order() {
    let path = helix_spec();
    let out = run(&["export-embedding", "--curve", path.to_str().unwrap(), "--samples", "16"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.starts_with("t,p012,p013,p014,p023,p024,p034,p123,p124,p134,p234"),
        "pluecker columns must follow the contractual order"
    );
    // every row is a unit circle point under the index-4 form
    let signs = [1.0, 1.0, 1.0, 1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -1.0];
    for line in text.lines().skip(1).filter(|l| !l.starts_with('#')) {
        let cells: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        let norm: f64 = cells[1..].iter().zip(&signs).map(|(p, s)| s * p * p).sum();
        assert!((norm - 1.0).abs() < 1e-9, "row fails the unit-norm invariant: {line}");
    }
}

#[test]
fn json_output_matches_the_published_schema() {
    let path = helix_spec();
    let out = run(&[
        "angle",
        "--curve",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let schema: serde_json::Value = serde_json::from_str(include_str!("../schema/cli-output.schema.json")).unwrap();

    // structural validation against the published schema
    let required: Vec<&str> =
        schema["required"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    let obj = doc.as_object().unwrap();
    for key in &required {
        assert!(obj.contains_key(*key), "missing required key {key}");
    }
    for key in obj.keys() {
        assert!(
            schema["properties"].as_object().unwrap().contains_key(key),
            "unexpected key {key} (schema forbids additional properties)"
        );
    }
    let allowed_commands: Vec<&str> = schema["properties"]["command"]["enum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert!(allowed_commands.contains(&doc["command"].as_str().unwrap()));
    let columns = doc["columns"].as_array().unwrap();
    assert!(!columns.is_empty());
    for row in doc["rows"].as_array().unwrap() {
        let row = row.as_array().unwrap();
        assert_eq!(row.len(), columns.len(), "rows must be rectangular");
        for cell in row {
            assert!(
                cell.is_number() || cell.is_string() || cell.is_boolean() || cell.is_null(),
                "cell type outside the schema: {cell:?}"
            );
        }
    }
    assert!(doc["summary"].is_object());
}

#[test]
fn output_file_flag_writes_the_report() {
    let path = helix_spec();
    let out_path = std::env::temp_dir().join(format!("confarc-out-{}.csv", std::process::id()));
    let out = run(&[
        "export-embedding",
        "--curve",
        path.to_str().unwrap(),
        "--samples",
        "8",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&out_path).unwrap();
    assert!(written.starts_with("t,p012"));
    std::fs::remove_file(&out_path).ok();
}

#[test]
fn sample_count_below_eight_is_an_input_error() {
    let path = helix_spec();
    let out = run(&["invariants", "--curve", path.to_str().unwrap(), "--samples", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sphereavg_matches_the_universal_constant() {
    let path = helix_spec();
    let out = run(&["sphereavg", "--curve", path.to_str().unwrap(), "--samples", "200"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let dev: f64 = text
        .lines()
        .find(|l| l.starts_with("# rel_dev"))
        .and_then(|l| l.split(',').nth(1))
        .unwrap()
        .parse()
        .unwrap();
    assert!(dev < 1e-2, "theta-average deviation {dev}");
}
