//! Command-line behavior: exit codes, output text and file round trips.

mod common;

use common::*;
use polyset::cli;
use polyset::io::{ProblemFile, SolutionFile, Status};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["polyset"];
    argv.extend_from_slice(args);
    let code = cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn path(name: &str) -> String {
    fixture(name).to_str().unwrap().to_string()
}

#[test]
fn solve_exit_codes() {
    let (code, out, _) = run(&["solve", &path("ex5.json")]);
    assert_eq!(code, 2);
    assert!(out.contains("witness x = (1)"), "{out}");
    let (code, out, _) = run(&["solve", &path("ex1.json")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("status: solution"));
    let (code, _, _) = run(&["solve", &path("infeasible.json")]);
    assert_eq!(code, 3);
    let (code, _, _) = run(&["solve", "/nonexistent/problem.json"]);
    assert_eq!(code, 1);
}

#[test]
fn malformed_files_are_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(fixture("ex1.json")).unwrap();
    let truncated = dir.path().join("truncated.json");
    std::fs::write(&truncated, &text[..text.len() / 2]).unwrap();
    let (code, out, err) = run(&["solve", truncated.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.starts_with("error:"));
    let bad_key = dir.path().join("bad.json");
    std::fs::write(&bad_key, text.replace("\"B\"", "\"BB\"")).unwrap();
    let (code, _, err) = run(&["check", bad_key.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("graph.h.BB"), "{err}");
}

#[test]
fn solution_file_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let sol = dir.path().join("sol.json");
    let (code, out, _) = run(&[
        "--json",
        "solve",
        &path("ex1.json"),
        "-o",
        sol.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let written = std::fs::read_to_string(&sol).unwrap();
    assert_eq!(out, written);
    let parsed = SolutionFile::parse(&written).unwrap();
    assert_eq!(parsed.status, Status::Solution);
    assert_eq!(parsed.to_json(), written);
    let (code, out, _) = run(&["verify", &path("ex1.json"), sol.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");

    // S̄ = {0} without directions misses the rays of the upper image.
    let partial = dir.path().join("partial.json");
    std::fs::write(
        &partial,
        r#"{"status": "solution", "S_bar": [["0"]], "S_hat": []}"#,
    )
    .unwrap();
    let (code, out, _) = run(&["verify", &path("ex1.json"), partial.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.contains("infimum not attained"), "{out}");

    // Any pair fails for a problem without solutions.
    let (code, _, _) = run(&["verify", &path("ex5.json"), sol.to_str().unwrap()]);
    assert_eq!(code, 2);

    // Wrong dimension.
    let wide = dir.path().join("wide.json");
    std::fs::write(
        &wide,
        r#"{"status": "solution", "S_bar": [["0", "1"]], "S_hat": []}"#,
    )
    .unwrap();
    let (code, _, _) = run(&["verify", &path("ex1.json"), wide.to_str().unwrap()]);
    assert_eq!(code, 1);
}

#[test]
fn check_reports() {
    let (code, out, _) = run(&["check", &path("ex1.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("bounded: false"));
    assert_eq!(out.matches(": true").count(), 8, "{out}");
    let (_, out, _) = run(&["check", &path("infeasible.json")]);
    assert!(out.contains("feasible: false"));
    assert_eq!(out.matches("not applicable").count(), 8);
    let (_, out, _) = run(&["--json", "check", &path("ex5.json")]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["feasible"], true);
    assert_eq!(v["condition3"], true);
    assert!(v["prop4"].as_object().unwrap().values().all(|b| b == false));
    let (_, out, _) = run(&["--json", "check", &path("infeasible.json")]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["bounded"].is_null());
}

#[test]
fn display_commands() {
    let (_, out, _) = run(&["upper-image", &path("ex5.json")]);
    let first = out.lines().next().unwrap();
    let mut parts: Vec<&str> = first.split(", ").collect();
    parts.sort();
    assert_eq!(parts, ["y₁ + 2y₂ ≥ 0", "y₁ ≥ 0"]);
    let (_, out, _) = run(&["eval", &path("ex1.json"), "1"]);
    assert_eq!(out.trim(), "y₁ ≥ −1, y₂ ≥ 1");
    let (_, out, _) = run(&["eval", &path("ex1.json"), "-1"]);
    assert!(out.starts_with("empty"));
    let (_, out, _) = run(&["project", &path("ex5.json")]);
    assert!(out.contains("y₁ + 2y₂ ≥ 0"));
    let (_, out, _) = run(&["--quiet", "project", &path("ex5.json")]);
    assert!(out.is_empty());
}

#[test]
fn minimal_command() {
    let (code, out, _) = run(&["minimal", &path("ex5hom.json"), "--point", "0"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("false"));
    assert!(out.contains("re-checked: true"));
    let (_, out, _) = run(&["minimal", &path("ex1.json"), "--direction", "1"]);
    assert_eq!(out.trim(), "true");
    let (code, _, err) = run(&["minimal", &path("ex1.json"), "--direction", "0"]);
    assert_eq!(code, 1);
    assert!(err.contains("nonzero"));
    let (code, _, _) = run(&["minimal", &path("ex1.json"), "--point", "-1"]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["minimal", &path("ex1.json")]);
    assert_eq!(code, 1);
    let (_, out, _) = run(&["--json", "minimal", &path("ex5.json"), "--direction", "1"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["minimal"], false);
    assert_eq!(v["certificate_checked"], true);
}

#[test]
fn fixtures_are_canonical() {
    for name in [
        "ex1.json",
        "ex5.json",
        "ex5hom.json",
        "infeasible.json",
        "vlp.json",
    ] {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        assert_eq!(ProblemFile::parse(&text).unwrap().to_json(), text, "{name}");
    }
}

#[test]
fn exit_code_depends_only_on_status() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = rng(11);
    for k in 0..15 {
        let p = random_problem(&mut rng);
        let file = dir.path().join(format!("p{k}.json"));
        std::fs::write(&file, ProblemFile::from_problem(&p).to_json()).unwrap();
        let (code, _, _) = run(&["--quiet", "solve", file.to_str().unwrap()]);
        assert_eq!(code, p.solve().unwrap().status().exit_code());
    }
}
