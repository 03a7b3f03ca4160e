//! Shared plumbing for driving the built binary: golden cases, the exit-code
//! matrix, and JSON-lines schema validation.

#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

/// Golden file, arguments, expected exit code.
pub const GOLDEN: &[(&str, &[&str], i32)] = &[
    ("autonomous_y2.txt", &["autonomous", "y^2"], 0),
    ("autonomous_y2.json", &["autonomous", "y^2", "--json"], 0),
    ("square_elliptic.txt", &["square", "y^3 + y + 1"], 0),
    ("square_elliptic.json", &["square", "y^3 + y + 1", "--json"], 0),
    ("abel_final.txt", &["abel", "--coeffs", "1/x;1/x^2;1/x^3"], 0),
    ("abel_final.json", &["abel", "--coeffs", "1/x;1/x^2;1/x^3", "--json"], 0),
    ("autonomous_zero.txt", &["autonomous", "0"], 2),
    ("autonomous_zero.json", &["autonomous", "0", "--json"], 2),
];

/// One row per execution path class; every code in {0, 1, 2, 3} that can be
/// reached without a bug appears.
pub const EXIT_MATRIX: &[(&[&str], i32)] = &[
    (&["autonomous", "y^2"], 0),
    (&["autonomous", "y^3 + y^2"], 0),
    (&["square", "y^3"], 0),
    (&["degbound", "y^3"], 0),
    (&["antider", "1/x"], 0),
    (&["logderiv", "1/(3*x)"], 0),
    (&["--help"], 0),
    (&["autonomous", "y +"], 1),
    (&["autonomous", "y $ 2"], 1),
    (&["autonomous", "x"], 1),
    (&["square", "1/y"], 1),
    (&["abel", "--coeffs", "1/x;"], 1),
    (&["autonomous"], 1),
    (&["frobnicate", "y"], 1),
    (&["autonomous", "y", "--bogus"], 1),
    (&["autonomous", "y", "--input", "/nonexistent/file"], 1),
    (&["autonomous", "0"], 2),
    (&["square", "0"], 2),
    (&["degbound", "0"], 2),
    (&["abel", "--coeffs", "1/x"], 2),
    (&["abel", "--coeffs", "1/x;1", "--constant-term", "x"], 2),
];

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liouvillian")).args(args).output().expect("binary runs")
}

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn schema() -> jsonschema::JSONSchema {
    let text = fs::read_to_string(manifest_dir().join("schema/report.schema.json")).expect("schema file");
    let value: Value = serde_json::from_str(&text).expect("schema is JSON");
    jsonschema::JSONSchema::compile(&value).expect("schema compiles")
}

/// Parses stdout as JSON lines, validating each against the schema.
pub fn json_lines(out: &Output) -> Result<Vec<Value>, String> {
    let schema = schema();
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|line| {
            let v: Value = serde_json::from_str(line).map_err(|e| format!("bad JSON {line:?}: {e}"))?;
            if let Err(errors) = schema.validate(&v) {
                let msgs: Vec<String> = errors.map(|e| e.to_string()).collect();
                return Err(format!("schema violation in {line}: {msgs:?}"));
            }
            Ok(v)
        })
        .collect()
}

pub fn check_golden(name: &str, args: &[&str], code: i32) -> Result<(), String> {
    let out = run(args);
    if out.status.code() != Some(code) {
        return Err(format!("{args:?}: exit {:?}, expected {code}", out.status.code()));
    }
    let expected = fs::read_to_string(manifest_dir().join("tests/golden").join(name)).map_err(|e| e.to_string())?;
    let got = String::from_utf8_lossy(&out.stdout);
    if got != expected {
        return Err(format!("{name}: output differs\n--- expected\n{expected}--- got\n{got}"));
    }
    if args.contains(&"--json") {
        json_lines(&out)?;
    }
    Ok(())
}

pub fn check_exit(args: &[&str], code: i32) -> Result<(), String> {
    let out = run(args);
    match out.status.code() {
        Some(c) if c == code => Ok(()),
        other => Err(format!("{args:?}: exit {other:?}, expected {code}")),
    }
}
