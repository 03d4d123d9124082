//! End-to-end tests of the `isoperim` binary: subcommand behavior, output
//! formats, exit codes, and determinism.

use std::path::Path;
use std::process::{Command, Output};

fn isoperim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isoperim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn json_result(out: &Output) -> serde_json::Value {
    let parsed: serde_json::Value =
        serde_json::from_str(&stdout_str(out)).expect("stdout is JSON");
    assert!(
        parsed.get("config").is_some(),
        "JSON output carries the config echo"
    );
    parsed["result"].clone()
}

fn assert_close(actual: f64, expected: f64, rel: f64) {
    let scale = expected.abs().max(1e-300);
    assert!(
        (actual - expected).abs() <= rel * scale,
        "expected {expected} within rel {rel}, got {actual}"
    );
}

#[test]
fn cylinder_profile_evaluation_matches_reference_value() {
    let out = isoperim(&[
        "profile", "--space", "cylinder", "--dim", "3", "--scale", "2", "--volume", "65",
    ]);
    assert!(out.status.success());
    let result = json_result(&out);
    assert_close(result["area"].as_f64().unwrap(), 99.4, 5e-3);
    assert_eq!(result["space"], "cylinder");
}

#[test]
fn hemisphere_boundary_is_the_equator() {
    // Unit S^2 at half the total volume 4*pi: the boundary is a great
    // circle of length 2*pi.
    let out = isoperim(&[
        "profile",
        "--space",
        "sphere",
        "--dim",
        "2",
        "--volume",
        "6.283185307179586",
    ]);
    assert!(out.status.success());
    let area = json_result(&out)["area"].as_f64().unwrap();
    assert_close(area, 2.0 * std::f64::consts::PI, 1e-9);
}

#[test]
fn euclidean_profile_reproduces_the_planar_constant() {
    // I_{R^2}(v) = sqrt(4*pi*v); at v = 1 this is the planar constant.
    let out = isoperim(&["profile", "--space", "euclidean", "--dim", "2", "--volume", "1"]);
    assert!(out.status.success());
    let area = json_result(&out)["area"].as_f64().unwrap();
    assert_close(area, (4.0 * std::f64::consts::PI).sqrt(), 1e-12);
}

#[test]
fn profile_range_emits_sorted_csv_with_endpoints() {
    let out = isoperim(&[
        "profile", "--space", "euclidean", "--dim", "2", "--from", "1", "--to", "4",
        "--samples", "4", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "v,lhs,rhs,margin");
    assert_eq!(lines.len(), 5);
    let first: f64 = lines[1].split(',').next().unwrap().parse().unwrap();
    let last: f64 = lines[4].split(',').next().unwrap().parse().unwrap();
    assert_close(first, 1.0, 1e-12);
    assert_close(last, 4.0, 1e-12);
    let mut prev = f64::NEG_INFINITY;
    for line in &lines[1..] {
        let v: f64 = line.split(',').next().unwrap().parse().unwrap();
        assert!(v > prev, "rows sorted by v");
        prev = v;
    }
}

#[test]
fn volume_outside_profile_domain_is_a_usage_error() {
    let out = isoperim(&[
        "profile", "--space", "sphere", "--dim", "4", "--scale", "4.7", "--volume", "999999",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("domain error"));
}

#[test]
fn product_bound_reports_active_segment_and_provenance() {
    let out = isoperim(&["bound", "--product", "s2xr2", "--volume", "100"]);
    assert!(out.status.success());
    let result = json_result(&out);
    assert_close(result["value"].as_f64().unwrap(), 123.29052618167323, 1e-12);
    assert!(result["provenance"]
        .as_str()
        .unwrap()
        .contains("forward power-law"));
}

#[test]
fn tube_bound_reproduces_the_threshold_example() {
    // vol_m = 12.566 ~ area of the unit 2-sphere; with alpha = 0.9 and
    // n = 2 the threshold lands near (4*pi / 0.03)^2 ~ 1.7546e5.
    let out = isoperim(&[
        "bound", "--tube", "--vol-m", "12.566", "--n", "2", "--alpha", "0.9",
    ]);
    assert!(out.status.success());
    let result = json_result(&out);
    assert_close(result["v0"].as_f64().unwrap(), 1.7546e5, 1e-3);
    assert_close(result["k"].as_f64().unwrap(), 3.0, 1e-3);
}

#[test]
fn forward_bound_reports_the_derived_coefficient() {
    let out = isoperim(&["bound", "--forward", "--x0", "65", "--y0", "99.4", "--n", "2"]);
    assert!(out.status.success());
    let result = json_result(&out);
    assert_close(result["coefficient"].as_f64().unwrap(), 12.329052618167323, 1e-12);
    assert_close(result["exponent"].as_f64().unwrap(), 0.5, 0.0);
}

#[test]
fn backward_bound_reports_the_scaling_factor() {
    let out = isoperim(&[
        "bound", "--backward", "--v0", "4", "--k", "5.5", "--total-dim", "4",
    ]);
    assert!(out.status.success());
    let result = json_result(&out);
    // 5.5 / gamma_4 where gamma_4 = V_3 / V_4^(3/4).
    assert_close(result["lambda"].as_f64().unwrap(), 0.9225401170774442, 1e-12);
}

#[test]
fn bound_requires_exactly_one_mode() {
    let none = isoperim(&["bound"]);
    assert_eq!(none.status.code(), Some(2));
    let two = isoperim(&["bound", "--tube", "--forward"]);
    assert_eq!(two.status.code(), Some(2));
}

#[test]
fn verify_single_claim_passes_with_exit_zero() {
    let out = isoperim(&["verify", "--claim", "fig1", "--samples", "512"]);
    assert_eq!(out.status.code(), Some(0));
    let result = json_result(&out);
    let report = &result.as_array().unwrap()[0];
    assert_eq!(report["claim_id"], "fig1");
    assert_eq!(report["passed"], true);
    assert!(report["min_margin"].as_f64().unwrap() > 0.0);
}

#[test]
fn verify_unknown_claim_is_a_usage_error() {
    let out = isoperim(&["verify", "--claim", "no-such-claim"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("unknown claim id"));
}

#[test]
fn verify_text_format_prints_one_line_per_claim() {
    let out = isoperim(&[
        "verify", "--claim", "seam-s2xr2", "--samples", "512", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("PASS seam-s2xr2"));
}

#[test]
fn figure_csv_has_contract_header_and_decimal_rows() {
    let out = isoperim(&["figure", "--id", "1", "--format", "csv", "--samples", "16"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "v,lhs,rhs,margin");
    assert_eq!(lines.len(), 17);
    for line in &lines[1..] {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 4);
        for field in &fields {
            assert!(
                !field.contains('e') && !field.contains('E'),
                "decimal notation only: {field}"
            );
            let value: f64 = field.parse().unwrap();
            assert!(value.is_finite());
        }
        let v: f64 = fields[0].parse().unwrap();
        let lhs: f64 = fields[1].parse().unwrap();
        let rhs: f64 = fields[2].parse().unwrap();
        let margin: f64 = fields[3].parse().unwrap();
        assert!(margin > 0.0, "figure 1 dominance holds on every row");
        assert_close(margin, lhs - rhs, 1e-9);
        assert!((4.0..=65.0).contains(&v));
    }
}

#[test]
fn figure_rows_carry_twelve_significant_digits() {
    let out = isoperim(&["figure", "--id", "2", "--format", "csv", "--samples", "8"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    for line in text.lines().skip(1) {
        for field in line.split(',') {
            let digits = field.chars().filter(char::is_ascii_digit).count();
            assert!(
                digits >= 12,
                "field {field} should carry 12 significant digits"
            );
        }
    }
}

#[test]
fn yamabe_product_filter_reports_the_ratio() {
    let out = isoperim(&["yamabe", "--product", "s3xr2"]);
    assert!(out.status.success());
    let result = json_result(&out);
    let entries = result.as_array().unwrap();
    assert_eq!(entries.len(), 1);
    assert_close(entries[0]["ratio"].as_f64().unwrap(), 0.8281, 1e-9);
}

#[test]
fn yamabe_default_lists_all_named_constants() {
    let out = isoperim(&["yamabe"]);
    assert!(out.status.success());
    let result = json_result(&out);
    let names: Vec<&str> = result
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["name"].as_str().unwrap())
        .collect();
    assert_eq!(names.len(), 8);
    for needle in [
        "product-ratio-s2xr2",
        "product-ratio-s3xr2",
        "product-ratio-s2xr3",
        "dimension-5-range",
    ] {
        assert!(names.contains(&needle), "missing {needle}");
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["figure", "--id", "5", "--format", "csv", "--samples", "32"];
    let first = isoperim(&args);
    let second = isoperim(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn out_file_matches_stdout_bytes() {
    let dir = std::env::temp_dir().join("isoperim-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fig4.csv");
    let to_file = isoperim(&[
        "figure", "--id", "4", "--format", "csv", "--samples", "16",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(to_file.status.success());
    assert!(to_file.stdout.is_empty());
    let to_stdout = isoperim(&["figure", "--id", "4", "--format", "csv", "--samples", "16"]);
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, to_stdout.stdout);
    std::fs::remove_file(Path::new(&path)).ok();
}

#[test]
fn json_config_echo_records_requested_parameters() {
    let out = isoperim(&[
        "profile", "--space", "euclidean", "--dim", "3", "--volume", "1",
        "--tol", "1e-7", "--samples", "100", "--eta-grid", "64",
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_close(parsed["config"]["tol"].as_f64().unwrap(), 1e-7, 0.0);
    assert_eq!(parsed["config"]["samples"], 100);
    assert_eq!(parsed["config"]["eta_grid"], 64);
}

#[test]
fn nonpositive_tolerance_is_a_usage_error() {
    let out = isoperim(&[
        "profile", "--space", "euclidean", "--dim", "2", "--volume", "1", "--tol", "-1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
