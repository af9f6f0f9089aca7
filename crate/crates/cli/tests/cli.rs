use std::process::{Command, Output};

use kg_lpt::reference::{Coupling, PARTIAL_SUM_COLUMNS, SCREENING_ROWS};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kg-lpt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn floats(v: &Value) -> Vec<f64> {
    v.as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect()
}

#[test]
fn corrections_json_reproduces_mixed_column() {
    let report = json(&["corrections", "-a", "1", "-b", "1", "--lambda", "0.05", "-n", "1", "-l", "1", "-K", "10", "--format", "json"]);
    for key in ["params", "corrections", "partial_sums"] {
        assert!(report.get(key).is_some(), "missing {key}");
    }
    let printed = PARTIAL_SUM_COLUMNS
        .iter()
        .find(|c| c.coupling == Coupling::Mixed && c.n == 1)
        .unwrap();
    let sums = floats(&report["partial_sums"]);
    assert_eq!(sums.len(), 11);
    for (x, y) in sums.iter().zip(&printed.sums) {
        assert!((x - y).abs() < 5e-10);
    }
    assert!(report.get("reference").is_none());
    assert!(report.get("error_pct").is_none());
}

#[test]
fn corrections_with_reference_carries_error() {
    let report = json(&["corrections", "-K", "5", "--numerov", "--format", "json"]);
    let reference = report["reference"].as_f64().unwrap();
    assert!((reference - 0.8424544828).abs() < 5e-9);
    let pct = report["error_pct"].as_f64().unwrap();
    assert!((pct - 0.00001).abs() < 2e-5);
    assert_eq!(report["numerov"]["nodes"], 1);
}

#[test]
fn zeroth_order_is_leading_energy() {
    let report = json(&["corrections", "-K", "0", "--format", "json"]);
    assert_eq!(floats(&report["corrections"]), vec![0.8]);
    assert_eq!(floats(&report["partial_sums"]), vec![0.8]);
}

#[test]
fn negative_discriminant_is_a_domain_error() {
    let out = run(&["corrections", "-a", "2", "-b", "0", "-l", "0", "-n", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("negative"), "{msg}");
    assert!(out.stdout.is_empty());
}

#[test]
fn order_cap_is_enforced() {
    let out = run(&["corrections", "-K", "31"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn missing_level_is_a_convergence_error() {
    let out = run(&["numerov", "--lambda", "4.7", "-n", "0", "-l", "0"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn table2_grades_itself() {
    let report = json(&["table2", "--format", "json"]);
    let runs = report["runs"].as_array().unwrap();
    assert_eq!(runs.len(), 6);
    for run in runs {
        assert_eq!(floats(&run["partial_sums"]).len(), 11);
        assert!(run["reference"].is_number());
    }
    for d in report["deviation"].as_array().unwrap() {
        assert!(d["max_abs"].as_f64().unwrap() < 5e-9, "{d}");
    }
}

#[test]
fn table2_csv_layout() {
    let out = run(&["table2", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1 + 11 + 2);
    assert!(lines[0].starts_with("k,E_V n=1,"));
    assert!(lines[12].starts_with("E_num,"));
    assert_eq!(lines[3].split(',').nth(3), Some("0.8423958333"));
}

#[test]
fn table1_matches_printed_values() {
    let report = json(&["table1", "--format", "json"]);
    let runs = report["runs"].as_array().unwrap();
    assert_eq!(runs.len(), 33);
    for (r, row) in SCREENING_ROWS.iter().enumerate() {
        for c in 0..3 {
            let run = &runs[3 * r + c];
            assert_eq!(run["params"]["lambda"].as_f64().unwrap(), row.lambda);
            let s5 = floats(&run["partial_sums"])[5];
            assert!((s5 - row.energy[c]).abs() < 5e-9);
            let pct = run["error_pct"].as_f64().unwrap();
            assert!((pct - row.error_pct[c]).abs() < 2e-5, "λ={} c={c}: {pct}", row.lambda);
        }
    }
}

#[test]
fn table1_without_reference() {
    let out = run(&["table1", "--no-numerov", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let header = text.lines().next().unwrap();
    assert_eq!(header, "lambda,E_V,E_W,E_VW");
    assert_eq!(text.lines().count(), 1 + 11 + 1);
}

#[test]
fn output_is_deterministic() {
    for format in ["json", "csv"] {
        let args = ["corrections", "-K", "12", "--numerov", "--format", format];
        assert_eq!(run(&args).stdout, run(&args).stdout);
    }
    let a = run(&["table2", "--format", "json"]).stdout;
    let b = run(&["table2", "--format", "json"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("crit.json");
    let out = run(&["critical-lambda", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let cr = report["critical"]["critical_lambda"].as_f64().unwrap();
    assert!((cr - 2.0 / (2f64.sqrt() - 1.0)).abs() < 1e-12);
    assert_eq!(report["critical"]["binding_threshold"].as_f64().unwrap(), 4.0);
}

#[test]
fn exact_swave_report() {
    let report = json(&["exact-swave", "-n", "0", "--numerov", "--format", "json"]);
    let exact = report["exact"]["energy"].as_f64().unwrap();
    assert!((exact - 0.024695031213697).abs() < 1e-12);
    let num = report["numerov"]["energy"].as_f64().unwrap();
    assert!((num - exact).abs() < 1e-8);
    assert_eq!(floats(&report["corrections"]).len(), 6);
}

#[test]
fn text_output_has_fixed_decimals() {
    let out = run(&["corrections", "-K", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().nth(2).unwrap().contains("0.8450000000"));
}
