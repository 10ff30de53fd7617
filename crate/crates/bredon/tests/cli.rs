use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use bredon_core::chartab::FiniteGroupTable;
use bredon_core::homology::HomologyReport;
use bredon_core::wallpaper::list_groups;
use serde_json::Value;

fn bredon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bredon")).args(args).output().expect("bredon runs")
}

fn bredon_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_bredon"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas").join(name);
    let value: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&value).unwrap()
}

fn assert_valid(validator: &jsonschema::Validator, doc: &Value) {
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
}

#[test]
fn compute_p6_text() {
    let o = bredon(&["compute", "p6", "--format", "text"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(&row[..4], ["p6", "Z", "0", "-"]);
    assert_eq!(row[4], "Z^9");
}

#[test]
fn compute_all_json_is_schema_valid() {
    let o = bredon(&["compute", "--all", "--format", "json"]);
    assert!(o.status.success());
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_valid(&schema("report.schema.json"), &doc);
    let reports: Vec<HomologyReport> = serde_json::from_value(doc).unwrap();
    let names: Vec<&str> = reports.iter().map(|r| r.group_name.as_str()).collect();
    assert_eq!(names, list_groups());
}

#[test]
fn json_output_is_deterministic() {
    let a = bredon(&["compute", "--all", "--format", "json"]);
    let b = bredon(&["compute", "--all", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn unknown_group_lists_names() {
    let o = bredon(&["compute", "nosuch"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("p4g") && err.contains("nosuch"), "{err}");
}

#[test]
fn compute_needs_an_input() {
    assert_eq!(bredon(&["compute"]).status.code(), Some(2));
}

#[test]
fn dump_then_load_matches_direct_compute() {
    let dir = tempfile::tempdir().unwrap();
    let complex_schema = schema("complex.schema.json");
    for name in list_groups() {
        let dumped = bredon(&["dump", "--dump-complex", name]);
        assert!(dumped.status.success(), "{name}");
        assert_valid(&complex_schema, &serde_json::from_slice(&dumped.stdout).unwrap());
        let path = dir.path().join(format!("{name}.json"));
        std::fs::write(&path, &dumped.stdout).unwrap();
        let path = path.to_str().unwrap();

        let direct = bredon(&["compute", name, "--format", "json"]);
        let loaded = bredon(&["compute", "--from-file", path, "--format", "json"]);
        let report = bredon(&["dump", "--from-file", path]);
        assert_eq!(direct.stdout, loaded.stdout, "{name}");
        assert_eq!(direct.stdout, report.stdout, "{name}");
    }
}

#[test]
fn dumped_tables_validate_on_reload() {
    let o = bredon(&["dump", "--dump-tables"]);
    assert!(o.status.success());
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_valid(&schema("tables.schema.json"), &doc);
    let tables: Vec<FiniteGroupTable> = serde_json::from_value(doc).unwrap();
    assert_eq!(tables.len(), 9);
    for t in &tables {
        assert!(t.validate().is_empty(), "{}", t.group_id);
    }
}

#[test]
fn malformed_complex_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\n  \"group_name\": \"x\",\n  \"orbits\": [\n}").unwrap();
    let o = bredon(&["compute", "--from-file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8(o.stderr).unwrap().contains("line 4"));
}

#[test]
fn invalid_complex_lists_violations() {
    let dumped = bredon(&["dump", "--dump-complex", "pmm"]);
    let mut complex: Value = serde_json::from_slice(&dumped.stdout).unwrap();
    let sign = &mut complex["boundary"][0]["sign"];
    *sign = Value::from(-sign.as_i64().unwrap());
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pmm.json");
    std::fs::write(&path, complex.to_string()).unwrap();
    let o = bredon(&["dump", "--from-file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8(o.stderr).unwrap().contains("Phi_1 * Phi_2 is not zero"));
}

#[test]
fn missing_file_is_an_input_error() {
    assert_eq!(bredon(&["compute", "--from-file", "/nonexistent/x.json"]).status.code(), Some(3));
}

#[test]
fn verify_table3_and_table4_pass() {
    let o = bredon(&["verify", "--table3", "--table4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("table3: 17/17 PASS"), "{text}");
    assert!(text.contains("table4: 17/17 PASS"), "{text}");
}

#[test]
fn verify_bases_reports_the_cm_row() {
    let o = bredon(&["verify", "--bases"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let failures: Vec<&str> = text.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(failures.len(), 1, "{text}");
    assert!(failures[0].starts_with("FAIL  cm H1"), "{}", failures[0]);
    assert!(text.contains("bases: 24/25 FAIL"));
}

#[test]
fn show_snf_and_differentials() {
    let o = bredon(&["compute", "pg", "--show-snf", "--show-differentials"]);
    let text = stdout(&o);
    assert!(text.contains("pg: chain ranks C2=1 C1=2 C0=1; invariant factors Phi_2 (2) Phi_1 ()"), "{text}");
    assert!(text.contains("Phi_2 of pg:"));
    assert!(text.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["beta_0", "2"]), "{text}");
}

#[test]
fn snf_from_stdin() {
    let o = bredon_stdin(&["snf", "--format", "json"], "[[2, 4], [6, 8]]");
    assert!(o.status.success());
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["invariant_factors"], serde_json::json!([2, 4]));
    assert_valid(&schema("matrix.schema.json"), &doc["d"]);
}

#[test]
fn snf_rejects_ragged_rows() {
    let o = bredon_stdin(&["snf"], "[[1, 2], [3]]");
    assert_eq!(o.status.code(), Some(3));
    let o = bredon_stdin(&["snf"], "[[1, 2.5]]");
    assert_eq!(o.status.code(), Some(3));
}
