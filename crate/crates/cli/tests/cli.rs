//! End-to-end tests of the `legendric` binary: exit codes, document
//! round-trips, and output determinism.

use std::io::Write;
use std::process::Command;

use legendric::json::{self, parse_check, parse_classification, parse_polytope};
use legendric::manifest::RunManifest;
use legendric_core::matrix::RationalMatrix;

fn run(args: &[&str]) -> (Option<i32>, String, String) {
    run_with_env(args, &[])
}

fn run_with_env(args: &[&str], env: &[(&str, &str)]) -> (Option<i32>, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_legendric"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let output = cmd.output().expect("binary runs");
    (
        output.status.code(),
        String::from_utf8(output.stdout).expect("utf-8 stdout"),
        String::from_utf8(output.stderr).expect("utf-8 stderr"),
    )
}

#[test]
fn check_reports_known_smooth_tuple() {
    let (code, stdout, _) = run(&["check", "--weights", "2,1,1"]);
    assert_eq!(code, Some(0));
    let doc = parse_check(&stdout).unwrap();
    assert_eq!(doc.report.tuple, vec![2, 1, 1]);
    assert!(doc.report.smooth);
    assert_eq!(doc.report.identification.as_deref(), Some("P1xQ1"));

    // Round-trip through the core report type.
    let report = doc.report.to_report().unwrap();
    let dto = json::ReportDto::from(&report);
    assert_eq!(dto, doc.report);
}

#[test]
fn invalid_weights_exit_with_code_two() {
    let (code, _, stderr) = run(&["check", "--weights", "2,2"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("not coprime"), "{stderr}");

    let (code, _, stderr) = run(&["check", "--weights", "1,2,1"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("not sorted"), "{stderr}");

    let (code, _, stderr) = run(&["check", "--weights", "2,x"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("not an integer"), "{stderr}");
}

#[test]
fn polytope_json_round_trips() {
    let (code, stdout, _) = run(&["polytope", "--weights", "2,1,1"]);
    assert_eq!(code, Some(0));
    let doc = parse_polytope(&stdout).unwrap();
    assert_eq!(doc.polytope.dim, 2);
    assert_eq!(doc.polytope.vertices.len(), 4);
    assert_eq!(doc.polytope.edges.len(), 4);

    let rebuilt = doc.polytope.to_polytope().unwrap();
    assert_eq!(rebuilt.vertices(), doc.polytope.vertices.as_slice());
    assert_eq!(rebuilt.facets().len(), doc.polytope.facets.len());
}

#[test]
fn polytope_off_matches_fixture() {
    let (code, stdout, _) = run(&["polytope", "--weights", "1,1,1", "--format", "off"]);
    assert_eq!(code, Some(0));
    let expected = "OFF\n\
                    6 1 6\n\
                    -1 -1 0\n\
                    -1 0 0\n\
                    0 -1 0\n\
                    0 1 0\n\
                    1 0 0\n\
                    1 1 0\n\
                    6 0 2 4 5 3 1\n";
    assert_eq!(stdout, expected);
}

#[test]
fn polytope_off_rejects_high_dimension() {
    let (code, _, stderr) = run(&["polytope", "--weights", "1,1,1,1,1", "--format", "off"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("unsupported dimension for OFF"), "{stderr}");
}

#[test]
fn verify_legendrian_dumps_base_frame() {
    let (code, stdout, _) = run(&[
        "verify-legendrian",
        "--weights",
        "2,1,1",
        "--trials",
        "3",
        "--seed",
        "42",
    ]);
    assert_eq!(code, Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["legendrian"], serde_json::Value::Bool(true));
    assert_eq!(doc["manifest"]["seed"], serde_json::json!(42));
    let frame = doc["base_frame"].as_array().unwrap();
    assert_eq!(frame.len(), 3);
    let first: Vec<&str> = frame[0]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(first, vec!["-2", "1", "1", "1", "1", "1"]);
}

#[test]
fn symplectic_decompose_splits_exactly() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, r#"[["1","2"],["3","4"]]"#).unwrap();
    let path = file.path().to_str().unwrap().to_string();

    let (code, stdout, _) = run(&["symplectic", "decompose", "--matrix", &path]);
    assert_eq!(code, Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let g_plus: Vec<Vec<String>> = serde_json::from_value(doc["g_plus"].clone()).unwrap();
    let g_minus: Vec<Vec<String>> = serde_json::from_value(doc["g_minus"].clone()).unwrap();
    let rows = |m: &[[&str; 2]; 2]| -> Vec<Vec<String>> {
        m.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect()
    };
    assert_eq!(g_plus, rows(&[["-3/2", "2"], ["3", "3/2"]]));
    assert_eq!(g_minus, rows(&[["5/2", "0"], ["0", "5/2"]]));

    // The parts add back to the input.
    let plus = json::matrix_from_strings(&g_plus).unwrap();
    let minus = json::matrix_from_strings(&g_minus).unwrap();
    assert_eq!(&plus + &minus, RationalMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]));
}

#[test]
fn symplectic_decompose_rejects_odd_sizes() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, r#"[["1"]]"#).unwrap();
    let path = file.path().to_str().unwrap().to_string();
    let (code, _, stderr) = run(&["symplectic", "decompose", "--matrix", &path]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("even size"), "{stderr}");
}

#[test]
fn classify_outputs_are_deterministic_up_to_duration() {
    let args = ["classify", "--n", "3", "--max-a", "4", "--jobs", "1"];
    let (_, first, _) = run(&args);
    let (_, second, _) = run(&args);
    let mut a = parse_classification(&first).unwrap();
    let mut b = parse_classification(&second).unwrap();
    a.manifest.duration_ms = 0;
    b.manifest.duration_ms = 0;
    assert_eq!(a, b);

    // Worker count must not affect the reports.
    let (_, third, _) = run(&["classify", "--n", "3", "--max-a", "4", "--jobs", "3"]);
    let c = parse_classification(&third).unwrap();
    assert_eq!(a.reports, c.reports);
    assert_eq!(c.manifest.jobs, 3);
}

#[test]
fn classify_summary_goes_to_stderr() {
    let (code, _, stderr) = run(&["classify", "--n", "3", "--max-a", "2"]);
    assert_eq!(code, Some(0));
    assert!(stderr.contains("tuples classified: 3"), "{stderr}");
    assert!(stderr.contains("smooth: (2,1,1)  P1xQ1"), "{stderr}");
}

#[test]
fn jobs_default_comes_from_environment() {
    let (_, stdout, _) = run_with_env(
        &["classify", "--n", "3", "--max-a", "2"],
        &[("LEGENDRIC_JOBS", "2")],
    );
    let doc = parse_classification(&stdout).unwrap();
    assert_eq!(doc.manifest.jobs, 2);
}

#[test]
fn emission_is_byte_identical_for_fixed_manifests() {
    let reports = legendric_core::classify_all(3, 3, 2, 7).unwrap();
    let manifest = || {
        RunManifest::new("fixed".to_string())
            .with_bounds(3, 3)
            .with_trials(2)
            .with_seed(7)
            .with_duration_ms(12)
    };
    let first = json::emit_classification(manifest(), &reports);
    let second = json::emit_classification(manifest(), &reports);
    assert_eq!(first, second);
}
