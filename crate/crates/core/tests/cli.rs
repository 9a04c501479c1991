//! File format and command-line behaviour.

use hnk::file::{parse_algebra_str, FileError, Presentation};
use hnk::graded::{Parity, Vector};
use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn algebra_fixtures() -> Vec<PathBuf> {
    let mut out: Vec<PathBuf> = std::fs::read_dir(fixture(""))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| std::fs::read_to_string(p).unwrap().contains("\"kind\""))
        .collect();
    out.sort();
    out
}

fn hnk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hnk")).args(args).output().expect("binary runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn temp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hnk-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn read_json(p: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

/// `(args, value)` pairs of the bracket listing in a written file.
fn bracket_entries(file: &Value) -> Vec<(Vec<String>, Value)> {
    file["products"]["bracket"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            let args = e["args"].as_array().unwrap().iter().map(|a| a.as_str().unwrap().to_string()).collect();
            (args, e["value"].clone())
        })
        .collect()
}

#[test]
fn shipped_files_round_trip_byte_for_byte() {
    let files = algebra_fixtures();
    assert!(files.len() >= 10);
    for path in files {
        let text = std::fs::read_to_string(&path).unwrap();
        let loaded = parse_algebra_str(&text, false).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let written = loaded.to_json();
        let again = parse_algebra_str(&written, false).unwrap();
        assert_eq!(loaded, again, "{}", path.display());
        assert_eq!(written, text, "{} is not in canonical form", path.display());
    }
}

#[test]
fn example_1_2_file_parses_with_its_grading() {
    let loaded = parse_algebra_str(&std::fs::read_to_string(fixture("example-1-2.json")).unwrap(), false).unwrap();
    let space = loaded.presentation.space();
    assert_eq!(space.dim(), 3);
    assert_eq!(space.parities(), &[Parity::Even, Parity::Even, Parity::Odd]);
    let Presentation::Associative(a) = &loaded.presentation else { panic!("wrong kind") };
    assert_eq!(a.mu().value(&[0, 1]), Vector::from_ints(&[-1, 0, 0]));
    assert_eq!(a.mu().value(&[1, 1]), Vector::from_ints(&[1, 1, 0]));
}

#[test]
fn skew_completion_is_opt_in() {
    let text = r#"{"kind": "hom-lie",
      "basis": [{"label": "a", "parity": 0}, {"label": "b", "parity": 0}],
      "products": {"bracket": [{"args": ["a", "b"], "value": {"a": "1/2"}}]},
      "maps": {"alpha": {"a": {"a": "1"}, "b": {"b": "1"}}}}"#;
    let raw = parse_algebra_str(text, false).unwrap();
    let Presentation::Lie(l) = &raw.presentation else { panic!() };
    assert!(l.bracket().value(&[1, 0]).is_zero());
    let completed = parse_algebra_str(text, true).unwrap();
    let Presentation::Lie(l) = &completed.presentation else { panic!() };
    assert_eq!(l.bracket().value(&[1, 0]), Vector::new(vec![hnk::scalar::ratio(-1, 2), hnk::scalar::int(0)]));
    // A repeated even argument cannot carry a skew value.
    let bad = text.replace("[\"a\", \"b\"]", "[\"a\", \"a\"]");
    assert!(matches!(parse_algebra_str(&bad, true), Err(FileError::Algebra(_))));
}

#[test]
fn parse_errors_are_specific() {
    let base = std::fs::read_to_string(fixture("example-1-8.json")).unwrap();
    let unknown_kind = base.replace("\"hom-poisson\"", "\"hom-jordan\"");
    assert!(matches!(parse_algebra_str(&unknown_kind, false), Err(FileError::Json(_))));
    let no_alpha = base.replace("\"alpha\"", "\"beta\"");
    assert!(matches!(parse_algebra_str(&no_alpha, false), Err(FileError::Invalid(_))));
    let bad_parity = base.replace("\"parity\": 1", "\"parity\": 2");
    assert!(matches!(parse_algebra_str(&bad_parity, false), Err(FileError::ParityViolation { .. })));
    let wrong_op = r#"{"kind": "hom-lie", "basis": [{"label": "e1", "parity": 0}], "products": {"mu": []}, "maps": {"alpha": {}}}"#;
    assert!(matches!(parse_algebra_str(wrong_op, false), Err(FileError::Invalid(_))));
    let missing_arity = r#"{"kind": "nary-nambu", "basis": [{"label": "e1", "parity": 0}], "maps": {"alpha": {}}}"#;
    assert!(matches!(parse_algebra_str(missing_arity, false), Err(FileError::Invalid(_))));
}

#[test]
fn check_command_verdicts_and_exit_codes() {
    let out = hnk(&["check", "hom-poisson", path_str(&fixture("example-1-8.json"))]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("PASS hom-poisson"));
    assert_eq!(hnk(&["check", "hom-lie", path_str(&fixture("zero.json"))]).status.code(), Some(0));
    // The induced ternary bracket violates the Nambu identity.
    let out = hnk(&["check", "nambu", path_str(&fixture("induced-n3.json"))]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("(e1, e2, e2, e2, e2): lhs = 0, rhs = 12*e1"));
    assert_eq!(hnk(&["check", "n-hom-lie", path_str(&fixture("seed-ternary.json"))]).status.code(), Some(0));
    // Inapplicable check, missing file, malformed input.
    let out = hnk(&["check", "hom-lie", path_str(&fixture("example-1-2.json"))]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not applicable"));
    assert_eq!(hnk(&["check", "hom-lie", "/nonexistent/file.json"]).status.code(), Some(2));
    let broken = temp("broken.json");
    std::fs::write(&broken, "{ not json").unwrap();
    assert_eq!(hnk(&["check", "hom-lie", path_str(&broken)]).status.code(), Some(2));
    let parity = temp("parity.json");
    std::fs::write(
        &parity,
        r#"{"kind": "hom-associative", "basis": [{"label": "e1", "parity": 0}, {"label": "e3", "parity": 1}],
           "products": {"mu": [{"args": ["e1", "e3"], "value": {"e1": "1"}}]}, "maps": {"alpha": {}}}"#,
    )
    .unwrap();
    let out = hnk(&["check", "hom-associative", path_str(&parity)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parity violation"));
}

#[test]
fn json_reports_are_stable_and_carry_the_digest() {
    let path = fixture("example-1-8-corrupted.json");
    let a = hnk(&["check", "hom-poisson", path_str(&path), "--json"]);
    let b = hnk(&["check", "hom-poisson", path_str(&path), "--json"]);
    assert_eq!(a.status.code(), Some(1));
    assert_eq!(a.stdout, b.stdout);
    let doc: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["verdict"], "fail");
    assert_eq!(doc["sub-checks"][0]["sub-checks"][2]["check"], "super-skew-symmetry");
    assert_eq!(doc["sub-checks"][0]["sub-checks"][2]["witness"]["tuple"], serde_json::json!(["e1", "e2"]));
    // Independent digest of the input bytes.
    if let Ok(sum) = Command::new("sha256sum").arg(&path).output() {
        let expected = String::from_utf8_lossy(&sum.stdout).split_whitespace().next().unwrap_or("").to_string();
        if !expected.is_empty() {
            assert_eq!(doc["input-digest"], expected.as_str());
        }
    }
}

#[test]
fn report_lists_every_applicable_check() {
    let out = hnk(&["report", path_str(&fixture("seed-lie.json"))]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let names: Vec<&str> = doc["checks"].as_array().unwrap().iter().map(|c| c["check"].as_str().unwrap()).collect();
    for expected in ["hom-lie", "n-hom-lie", "phi-conditions", "phi-annihilates-induced"] {
        assert!(names.contains(&expected), "{expected} missing from {names:?}");
    }
    let out = hnk(&["report", path_str(&fixture("example-1-4-phi.json"))]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn construct_commutator() {
    let out_path = temp("commutator.json");
    let out = hnk(&["construct", "commutator", path_str(&fixture("example-1-2.json")), "-o", path_str(&out_path)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let file = read_json(&out_path);
    assert_eq!(file["kind"], "hom-lie");
    // μ(e1,e2) − μ(e2,e1) = −e1; the other generators vanish.
    assert_eq!(bracket_entries(&file), vec![(vec!["e1".to_string(), "e2".to_string()], serde_json::json!({"e1": "-1"}))]);
    assert_eq!(file["provenance"]["construction"], "commutator");
    assert_eq!(hnk(&["check", "hom-lie", path_str(&out_path)]).status.code(), Some(0));
    let with_product = temp("commutator-poisson.json");
    let out = hnk(&[
        "construct",
        "commutator",
        path_str(&fixture("example-1-2.json")),
        "--with-product",
        "-o",
        path_str(&with_product),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(hnk(&["check", "hom-poisson", path_str(&with_product)]).status.code(), Some(0));
}

#[test]
fn construct_rota_baxter_twist() {
    let out_path = temp("rb.json");
    let (r, input) = (fixture("R.json"), fixture("example-1-4.json"));
    let args = [
        "construct",
        "rb-twist",
        "--weight",
        "0",
        "--R",
        path_str(&r),
        path_str(&input),
        "-o",
        path_str(&out_path),
    ];
    let out = hnk(&args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let file = read_json(&out_path);
    // [e2,e2]_R = [Re2,e2] + [e2,Re2] = 4·2e1.
    assert_eq!(bracket_entries(&file), vec![(vec!["e2".to_string(), "e2".to_string()], serde_json::json!({"e1": "8"}))]);
    assert_eq!(file["provenance"]["parameters"]["weight"], "0");
    assert_eq!(hnk(&["check", "hom-lie", path_str(&out_path)]).status.code(), Some(0));
    // The same map is not a Rota–Baxter operator of weight 1.
    let mut bad = args.to_vec();
    bad[3] = "1";
    let out = hnk(&bad);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("precondition failed"));
}

#[test]
fn construct_induced_bracket_and_reduce_it() {
    let out_path = temp("induced.json");
    let out = hnk(&[
        "construct",
        "induce-nary",
        "--phi",
        path_str(&fixture("phi.json")),
        "--n",
        "3",
        path_str(&fixture("example-1-4.json")),
        "-o",
        path_str(&out_path),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let file = read_json(&out_path);
    assert_eq!(file["kind"], "nary-nambu");
    assert_eq!(file["arity"], 3);
    let entries = bracket_entries(&file);
    assert_eq!(entries, vec![(vec!["e1".into(), "e2".into(), "e2".into()], serde_json::json!({"e1": "2"}))]);
    assert!(file["provenance"]["parameters"]["phi-conditions"].as_str().unwrap().starts_with("fail"));
    assert_eq!(std::fs::read(&out_path).unwrap(), std::fs::read(fixture("induced-n3.json")).unwrap());

    let reduced = temp("reduced.json");
    let out = hnk(&["construct", "reduce", "--a", "e1", path_str(&out_path), "-o", path_str(&reduced)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let file = read_json(&reduced);
    assert_eq!(file["provenance"]["parameters"]["reduction-conditions"], "pass");
    assert_eq!(bracket_entries(&file), vec![(vec!["e2".to_string(), "e2".to_string()], serde_json::json!({"e1": "2"}))]);

    // Arity and cochain degree must agree.
    let out = hnk(&[
        "construct",
        "induce-nary",
        "--phi",
        path_str(&fixture("phi.json")),
        "--n",
        "4",
        path_str(&fixture("example-1-4.json")),
        "-o",
        path_str(&temp("never.json")),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_on_the_seed_fixture_yields_a_passing_algebra() {
    let out_path = temp("seed-induced.json");
    let out = hnk(&[
        "construct",
        "induce-nary",
        "--phi",
        path_str(&fixture("phi.json")),
        "--n",
        "3",
        path_str(&fixture("seed-poisson.json")),
        "-o",
        path_str(&out_path),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let file = read_json(&out_path);
    assert_eq!(file["kind"], "nary-nambu-poisson");
    assert_eq!(file["provenance"]["parameters"]["phi-conditions"], "pass");
    assert_eq!(file["provenance"]["parameters"]["phi-poisson"], "pass");
    assert_eq!(hnk(&["report", path_str(&out_path)]).status.code(), Some(0));
}

#[test]
fn construction_flags_are_validated() {
    let out = hnk(&["construct", "rb-twist", path_str(&fixture("example-1-4.json")), "-o", path_str(&temp("x.json"))]);
    assert_eq!(out.status.code(), Some(2));
    let out = hnk(&["construct", "commutator", path_str(&fixture("example-1-4.json")), "-o", path_str(&temp("x.json"))]);
    assert_eq!(out.status.code(), Some(2));
    let out = hnk(&["construct", "frobnicate", path_str(&fixture("example-1-4.json")), "-o", path_str(&temp("x.json"))]);
    assert_eq!(out.status.code(), Some(2));
}
