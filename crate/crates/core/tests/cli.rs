use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_persistent-ideals"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str], out: &Path) -> Output {
    bin().args(args).arg("--out").arg(out).output().expect("binary runs")
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn barcodes_from_distance_csv() {
    let dir = tempfile::tempdir().unwrap();
    let input = data("right_triangle.csv");
    let out = run(&["barcodes", "--input", input.to_str().unwrap(), "--svg"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    let doc = read_json(&dir.path().join("barcodes.json"));
    let kinds: Vec<&str> = doc["barcodes"].as_array().unwrap().iter().map(|b| b["kind"].as_str().unwrap()).collect();
    assert_eq!(kinds, ["SR", "EDGE", "PH"]);
    assert_eq!(doc["single_interval_per_prime"], Value::Bool(true));
    let sr = &doc["barcodes"][0]["intervals"];
    let zero = sr.as_array().unwrap().iter().find(|i| i["prime"].as_array().is_some_and(Vec::is_empty)).unwrap();
    assert_eq!(zero["death"], "inf");
    assert!(dir.path().join("barcodes.svg").exists());
}

#[test]
fn barcodes_are_byte_identical_across_runs() {
    let input = data("right_triangle.csv");
    let files: Vec<Vec<u8>> = (0..2)
        .map(|_| {
            let dir = tempfile::tempdir().unwrap();
            assert!(run(&["barcodes", "--input", input.to_str().unwrap()], dir.path()).status.success());
            std::fs::read(dir.path().join("barcodes.json")).unwrap()
        })
        .collect();
    assert_eq!(files[0], files[1]);
}

#[test]
fn barcodes_from_points_and_complexes() {
    for (file, format) in [("four_points.json", "points-json"), ("filtered_complex.json", "complex-json")] {
        let dir = tempfile::tempdir().unwrap();
        let input = data(file);
        let out = run(&["barcodes", "--input", input.to_str().unwrap(), "--format", format], dir.path());
        assert_eq!(out.status.code(), Some(0), "{file}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(dir.path().join("barcodes.json").exists());
    }
}

#[test]
fn labelled_report_for_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    let input = data("square_with_tail.json");
    let out = run(
        &["labelled", "--input", input.to_str().unwrap(), "--alpha", "0,1,1,1", "--point", "1,2,3,4", "--allowed-atoms", "x2,x3,x4"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(!stdout.contains("FAIL"), "{stdout}");
    let report = read_json(&dir.path().join("report.json"));
    assert_eq!(report["passed"], Value::Bool(true));
}

#[test]
fn labelled_inadmissible_point_reports_window() {
    let dir = tempfile::tempdir().unwrap();
    let input = data("triangle_sum_label.json");
    let out = run(&["labelled", "--input", input.to_str().unwrap(), "--point", "1,-1"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = read_json(&dir.path().join("report.json"));
    assert_eq!(report["evaluation"]["result"]["admissible"], Value::Bool(false));
    assert_eq!(report["evaluation"]["result"]["vanishing_vertices"], serde_json::json!([1]));
    assert_eq!(report["local_window"]["window"], serde_json::json!([2, 3]));
    assert_eq!(report["local_window"]["evaluation"]["equal"], Value::Bool(true));
}

#[test]
fn unit_labels_are_flagged_classical() {
    let dir = tempfile::tempdir().unwrap();
    let input = data("unit_labels.json");
    let out = run(&["labelled", "--input", input.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("classical complex"));
}

#[test]
fn verify_passes_and_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["verify", "--trials", "8", "--max-n", "6"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let report = read_json(&dir.path().join("report.json"));
    assert_eq!(report["passed"], Value::Bool(true));
    assert_eq!(report["suites"].as_array().unwrap().len(), 12);
}

#[test]
fn injected_fault_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["verify", "--trials", "8", "--inject-fault"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.lines().any(|l| l.starts_with("FAIL no-resurrection")), "{stdout}");
}

#[test]
fn bad_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.csv");
    std::fs::write(&empty, "").unwrap();
    let out = run(&["barcodes", "--input", empty.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("error:"));

    let asym = dir.path().join("asym.csv");
    std::fs::write(&asym, "0,1\n2,0\n").unwrap();
    assert_eq!(run(&["barcodes", "--input", asym.to_str().unwrap()], dir.path()).status.code(), Some(2));

    let missing = dir.path().join("missing.csv");
    assert_eq!(run(&["barcodes", "--input", missing.to_str().unwrap()], dir.path()).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    let out = bin().args(["barcodes"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["verify", "--max-n", "9"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
