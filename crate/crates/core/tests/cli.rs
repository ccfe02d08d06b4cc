use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::LazyLock;

use serde_json::Value;

const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data");

static SCHEMA: LazyLock<jsonschema::Validator> = LazyLock::new(|| {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/schema/output.schema.json")).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
});

fn data(name: &str) -> String {
    format!("{DATA}/{name}")
}

fn bredon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bredon")).args(args).output().unwrap()
}

fn assert_schema_valid(doc: &Value) {
    let errors: Vec<String> = SCHEMA.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "schema violations {errors:?} in {doc}");
}

/// Runs a job expected to succeed and returns its schema-checked document.
fn ok(args: &[&str]) -> Value {
    let out = bredon(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_schema_valid(&doc);
    doc
}

/// Runs a job expected to fail with `code` and returns its schema-checked diagnostic.
fn fails(args: &[&str], code: i32) -> Value {
    let out = bredon(args);
    assert_eq!(out.status.code(), Some(code), "{args:?}");
    assert!(out.stdout.is_empty());
    let diag: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_schema_valid(&diag);
    diag
}

fn groups(doc: &Value) -> Vec<String> {
    doc["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            let mut parts: Vec<String> =
                r["torsion"].as_array().unwrap().iter().map(|d| format!("Z/{}", d.as_u64().unwrap())).collect();
            parts.extend(std::iter::repeat_n("Z".to_string(), r["rank"].as_u64().unwrap() as usize));
            if parts.is_empty() {
                "0".into()
            } else {
                parts.join(" + ")
            }
        })
        .collect()
}

fn scratch(name: &str, contents: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn cohomology_examples() {
    let (c2, z) = (data("c2.json"), data("z-trivial.json"));
    let full = ok(&["cohomology", "--group", &c2, "--family", "full", "--module", &z, "--degrees", "0..2"]);
    assert_eq!(groups(&full), ["Z", "0", "0"]);
    let trivial = ok(&["cohomology", "--group", &c2, "--family", "trivial-only", "--module", &z, "--degrees", "0..2"]);
    assert_eq!(groups(&trivial), ["Z", "0", "Z/2"]);
    let empty = ok(&["cohomology", "--group", &c2, "--family", "full", "--module", &z, "--degrees", "2..1"]);
    assert_eq!(groups(&empty), Vec::<String>::new());
}

#[test]
fn cohomology_with_checks_and_cocycles() {
    let (s3, z) = (data("s3.json"), data("z-trivial.json"));
    let doc = ok(&["--check", "cohomology", "--group", &s3, "--family", "trivial-only", "--module", &z, "--cocycles"]);
    assert_eq!(groups(&doc), ["Z", "0", "Z/2"]);
    let checks = doc["checks"].as_array().unwrap();
    assert!(!checks.is_empty() && checks.iter().all(|c| c["pass"] == true));
    let family = ok(&["family-close", "--group", &data("c4.json"), "--family", &data("c4-upto-c2.json")]);
    assert_eq!(family["subgroups"], serde_json::json!([[0], [0, 2]]));
}

#[test]
fn structures_examples() {
    let (c2, z2) = (data("c2.json"), data("z2-trivial.json"));
    let f1 = ok(&["--check", "structures", "--group", &c2, "--family", "trivial-only", "--module", &z2]);
    assert_eq!(f1["classes"].as_u64().unwrap(), 2);
    let full = ok(&["--check", "structures", "--group", &c2, "--family", "full", "--module", &z2]);
    assert_eq!((full["classes"].as_u64().unwrap(), full["split_index"].as_u64()), (1, Some(0)));
    let one = ok(&["structures", "--group", "C1", "--family", "full", "--module", &z2]);
    assert_eq!(one["classes"].as_u64().unwrap(), 1);
}

#[test]
fn other_commands_are_schema_valid() {
    let (c2, z2, sign) = (data("c2.json"), data("z2-trivial.json"), data("z-sign-c2.json"));
    ok(&["--check", "derivations", "--group", &c2, "--family", "trivial-only", "--module", &sign]);
    ok(&["characters", "--group", &data("c2xc2.json"), "--family", "cyclic"]);
    ok(&["--check", "galois", "--p", "2", "--n", "4", "--d", "1"]);
    ok(&["--check", "oracle", "--group", &data("c3.json"), "--module", &z2, "--degrees", "0..3"]);
    ok(&["check", "oracle"]);
}

#[test]
fn galois_vanishes() {
    let doc = ok(&["galois", "--p", "3", "--n", "2", "--d", "1"]);
    assert_eq!(groups(&doc), ["0", "0", "0"]);
}

#[test]
fn output_file_and_determinism() {
    let args = ["cohomology", "--group", "S3", "--family", "full", "--module", &data("z3-trivial.json")];
    let first = bredon(&args);
    assert_eq!(first.status.code(), Some(0));
    for threads in ["1", "2", "4"] {
        let mut with = vec!["--threads", threads];
        with.extend(args);
        assert_eq!(bredon(&with).stdout, first.stdout, "--threads {threads}");
    }
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("s3-z3.json");
    let p = path.to_string_lossy().into_owned();
    let mut with = vec!["--output", p.as_str()];
    with.extend(args);
    let out = bredon(&with);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), first.stdout);
}

#[test]
fn validation_errors_exit_2() {
    let (c2, z) = (data("c2.json"), data("z-trivial.json"));
    assert_eq!(fails(&["check", "everything"], 2)["error"], "validation");
    let typo =
        scratch("typo-module.json", r#"{"rank": 1, "torsion": [], "acton": {"generators": [], "matrices": []}}"#);
    fails(&["cohomology", "--group", &c2, "--family", "full", "--module", &typo], 2);
    let not_group = scratch("not-group.json", r#"{"order": 2, "table": [[0, 1], [0, 1]]}"#);
    fails(&["cohomology", "--group", &not_group, "--family", "full", "--module", &z], 2);
    let bad_family = scratch("bad-family.json", r#"{"subgroups": [[0, 1, 2]]}"#);
    fails(&["cohomology", "--group", &c2, "--family", &bad_family, "--module", &z], 2);
    let flags = scratch("flag-typo.json", r#"{"subgroups": [[0]], "close_conjugaton": true}"#);
    fails(&["cohomology", "--group", &c2, "--family", &flags, "--module", &z], 2);
    // the trivial subgroup is required for fixed point functor results
    let no_e = scratch("no-trivial.json", r#"{"subgroups": [[0, 1]]}"#);
    fails(&["derivations", "--group", &c2, "--family", &no_e, "--module", &z], 2);
    fails(&["structures", "--group", &c2, "--family", "full", "--module", &z], 2);
    fails(&["galois", "--p", "4", "--n", "2", "--d", "1"], 2);
    fails(&["galois", "--p", "2", "--n", "4", "--d", "3"], 2);
    fails(&["cohomology", "--group", &c2, "--family", "full", "--module", &z, "--degrees", "x..2"], 2);
    fails(&["--threads", "0", "check", "oracle"], 2);
    assert_eq!(bredon(&["cohomology"]).status.code(), Some(2));
}

#[test]
fn size_limit_exits_3() {
    let diag = fails(
        &["--size-cap", "10", "cohomology", "--group", "S3", "--family", "full", "--module", &data("z-trivial.json")],
        3,
    );
    assert_eq!(diag["error"], "size-limit");
}
