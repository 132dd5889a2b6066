//! End-to-end checks of the `formcert` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn formcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_formcert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("formcert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn report_schema() -> jsonschema::Validator {
    let text = include_str!("../schema/report.schema.json");
    let schema: Value = serde_json::from_str(text).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn certify_json(n: &str, poly: &str, extra: &[&str]) -> (i32, Value) {
    let mut args = vec!["certify", "--json", "-n", n, poly];
    args.extend_from_slice(extra);
    let o = formcert(&args);
    (o.status.code().unwrap(), serde_json::from_str(&stdout(&o)).unwrap())
}

#[test]
fn exit_codes_follow_the_verdict() {
    let cases = [
        ("2", "x1^4 + x2^4", 0),
        ("3", "x1^2 + x2^2 + x3^2", 0),
        ("2", "x1^2 - 2 x1 x2 + x2^2", 0),
        ("2", "-x1^2 - x2^2", 1),
        ("2", "x1^4 - 3 x1^2 x2^2 + x2^4", 1),
        ("3", "x1^2 + x2^2 - x3^2", 1),
        ("2", "x1^2 x2^2", 2),
    ];
    for (n, poly, code) in cases {
        let o = formcert(&["certify", "-n", n, poly]);
        assert_eq!(o.status.code(), Some(code), "{poly}: {}", stdout(&o));
    }
}

#[test]
fn errors_go_to_stderr() {
    for (args, code) in [
        (&["certify", "-n", "2", "x1^3 + x2^3"][..], 64),
        (&["certify", "-n", "2", "x1^2 +"][..], 64),
        (&["frobnicate"][..], 64),
        (&["discriminant", "-n", "5", "x1^2 + x5^2"][..], 65),
    ] {
        let o = formcert(args);
        assert_eq!(o.status.code(), Some(code), "{args:?}");
        assert!(o.stdout.is_empty());
        assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    }
}

#[test]
fn reports_match_the_schema() {
    let schema = report_schema();
    let forms = [
        ("2", "x1^4 + x2^4"),
        ("2", "x1^2 x2^2"),
        ("2", "x1^4 - 3 x1^2 x2^2 + x2^4"),
        ("3", "x1^2 + x2^2 - x3^2"),
        ("2", "-x1^2 - x2^2"),
        ("3", "x1^4 + x1^2 x2^2 + x2^4 + x3^4"),
        ("5", "x1^2 + x2^2 + x3^2 + x4^2 + x5^2"),
        ("5", "x1^4 + x2^4 + x3^4 + x4^4 + x5^4"),
    ];
    for (n, poly) in forms {
        let (_, v) = certify_json(n, poly, &["--subspace", &span_for(n)]);
        let errors: Vec<String> = schema.iter_errors(&v).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{poly}: {errors:#?}");
    }
}

fn span_for(n: &str) -> String {
    let n: usize = n.parse().unwrap();
    let row: Vec<&str> = (0..n).map(|i| if i < 2 { "1" } else { "0" }).collect();
    row.join(",")
}

#[test]
fn json_is_reproducible_apart_from_timings() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("timings");
        v
    };
    let poly = "x1^4 - x1 x2^3 + 2 x2^4";
    let (_, a) = certify_json("2", poly, &[]);
    let (_, b) = certify_json("2", poly, &[]);
    let (_, c) = certify_json("2", poly, &["--parallel"]);
    assert_eq!(strip(a.clone()), strip(b));
    assert_eq!(strip(a), strip(c));
}

#[test]
fn witness_and_certificates_are_exact() {
    let (code, v) = certify_json("2", "x1^4 - 3 x1^2 x2^2 + x2^4", &[]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "NOT_NONNEGATIVE");
    assert_eq!(v["witness"], serde_json::json!(["1", "1"]));
    let (_, v) = certify_json("2", "x1^4 + x2^4", &[]);
    let kinds: Vec<&str> = v["certificates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["kind"].as_str().unwrap())
        .collect();
    assert!(kinds.contains(&"CHI_POSITIVE_RAY"), "{kinds:?}");
    assert!(kinds.contains(&"HANKEL_PSD"), "{kinds:?}");
    // χ(J) = (1 + t)^6
    assert_eq!(
        v["report"]["sufficient"]["chi"],
        serde_json::json!(["1", "6", "15", "20", "15", "6", "1"])
    );
}

#[test]
fn forms_can_come_from_files() {
    let path = scratch("form.txt");
    std::fs::write(&path, "x1^4 + 2 x1^2 x2^2 + x2^4\n").unwrap();
    let o = formcert(&["discriminant", "-n", "2", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\n");

    let path = scratch("poly.txt");
    std::fs::write(&path, "t^2 - 5 t + 6").unwrap();
    let o = formcert(&["roots", "--file", path.to_str().unwrap()]);
    assert!(stdout(&o).contains("distinct positive roots (Sturm): 2"));

    let o = formcert(&["discriminant", "-n", "2", "--file", "/nonexistent/form.txt"]);
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn charpoly_writes_a_table() {
    let path = scratch("chi.dat");
    let o = formcert(&[
        "charpoly",
        "-n",
        "2",
        "x1^2 + 2 x2^2",
        "--table",
        path.to_str().unwrap(),
        "--range",
        "0:2",
        "--samples",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("t^2 + 3 t + 2\n"));
    let table = std::fs::read_to_string(&path).unwrap();
    let rows: Vec<(f64, f64)> = table
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let mut cells = l.split_whitespace().map(|c| c.parse::<f64>().unwrap());
            (cells.next().unwrap(), cells.next().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 5);
    for (t, y) in rows {
        assert!((y - (t * t + 3.0 * t + 2.0)).abs() < 1e-9, "χ({t}) = {y}");
    }
}

#[test]
fn restrict_and_hankel() {
    let o = formcert(&["restrict", "-n", "3", "x1^2 + x1 x2 + x3^2", "--subset", "1,3"]);
    assert_eq!(stdout(&o), "x1^2 + x2^2\n");
    let o = formcert(&["hankel", "-n", "2", "--json", "x1^4 + x2^4"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["definiteness"], "POSITIVE_SEMIDEFINITE");
}
