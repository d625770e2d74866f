use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_durfee")).args(args).output().expect("spawn durfee")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn durfee_text_on_quartic() {
    let out = run(&["durfee", &data("quartic_threefold.json")]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let s = stdout(&out);
    assert!(s.contains("μ=256 p_g=5 C=24 margin=136"), "{s}");
    assert!(s.contains("verdict=holds"));
}

#[test]
fn durfee_json_carries_metadata() {
    let out = run(&["durfee", &data("cubic_surface.json"), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    assert!(s.contains("\"mu\": \"8\""), "{s}");
    assert!(s.contains("\"pg\": \"1\""));
    assert!(s.contains("\"version\""));
    assert!(s.contains("\"conventions\""));
    assert!(s.ends_with("}\n"));
}

#[test]
fn scan_csv_has_fixed_header() {
    let out = run(&["scan", &data("unequal_pair.json"), "--range", "1..3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let s = stdout(&out);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "input_hash,n,r,d,mu,pg,cnr_num,cnr_den,margin_num,margin_den,verdict");
    assert_eq!(lines.len(), 4);
    assert!(lines[1].ends_with(",3,2,1,61,1,16,1,45,1,holds"), "{}", lines[1]);
}

#[test]
fn scan_equal_pair_reaches_sixteen() {
    let out = run(&["scan", &data("quadric_pair.json"), "--range", "1..4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("quotient 16 vs C(n,r) = 16"));
}

#[test]
fn counterexample_rows() {
    let out = run(&["counterexample", "--m-range", "2..3"]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    assert!(s.contains("μ=16 p_g=4 μ−6p_g=-8"), "{s}");
    assert!(s.contains("μ=47 p_g=11 μ−6p_g=-19"));
}

#[test]
fn counterexample_rejects_small_m() {
    let out = run(&["counterexample", "--m-range", "1..3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn thm2_reports_leading_margin() {
    let out = run(&["thm2", &data("mixed_degrees.json"), "--range", "1..6"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let s = stdout(&out);
    assert!(s.contains("leading margin: 6"), "{s}");
    assert!(!s.contains("[FAIL]"));
}

#[test]
fn lemma_suite_small() {
    let out = run(&["lemma-suite", "--n-max", "4", "--r-max", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("7/15 > 3/8"));
}

#[test]
fn ehrhart_polygon_and_diagram() {
    let out = run(&["ehrhart", &data("polygon.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("c_0..c_N: 1, 2, 8"));

    let out = run(&["ehrhart", &data("cubic_surface.json"), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("\"kind\""));
}

#[test]
fn mixed_covol_table() {
    let out = run(&["mixed-covol", &data("unequal_pair.json")]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    assert!(s.contains("(5,0) 4/15"), "{s}");
    assert!(s.contains("(0,5) 81/40"));
    assert!(s.contains("grid lexicographic"));
}

#[test]
fn conjecture_is_labelled() {
    let out = run(&["conjecture", &data("unequal_pair.json"), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\"status\": \"conjectural\""));
}

#[test]
fn negative_exponent_is_an_input_error() {
    let out = run(&["durfee", &data("negative.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("support[1][1]: negative exponent"), "{}", stderr(&out));
}

#[test]
fn malformed_json_reports_position() {
    let path = std::env::temp_dir().join(format!("durfee-bad-{}.json", std::process::id()));
    std::fs::write(&path, "{\"ambient_dim\": 2, \"support\": [[1,0],\n").unwrap();
    let out = run(&["durfee", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line"), "{}", stderr(&out));
}

#[test]
fn missing_file_is_exit_two() {
    let out = run(&["durfee", "/nonexistent/durfee-input.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_range_is_exit_two() {
    let out = run(&["scan", &data("quadric_pair.json"), "--range", "4..1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["scan", &data("quadric_pair.json"), "--range", "x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn csv_on_tableless_report_is_exit_two() {
    let out = run(&["lemma-suite", "--n-max", "3", "--r-max", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_exhaustion_is_exit_three() {
    let out = run(&["scan", &data("quartic_threefold.json"), "--range", "20..20", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("budget exceeded"));
}

#[test]
fn out_writes_file() {
    let path = std::env::temp_dir().join(format!("durfee-out-{}.json", std::process::id()));
    let out = run(&["durfee", &data("quartic_threefold.json"), "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(written.contains("\"mu\": \"256\""));
}
