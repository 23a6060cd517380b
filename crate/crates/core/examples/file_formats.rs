//! Problem, solution and family files: parse, evaluate, print canonically.
//!
//! ```text
//! cargo run --example file_formats                 # walk through ex1.json
//! cargo run --example file_formats -- FILE.json    # print FILE in canonical form
//! ```

use polyset::io::{FamilyFile, ProblemFile, SolutionFile};

const EX1: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ex1.json");

fn canonical(path: &str) -> Result<String, polyset::error::Error> {
    let text =
        std::fs::read_to_string(path).map_err(|e| polyset::error::Error::Io(e.to_string()))?;
    ProblemFile::parse(&text)
        .map(|f| f.to_json())
        .or_else(|_| SolutionFile::parse(&text).map(|f| f.to_json()))
        .or_else(|_| FamilyFile::parse(&text).map(|f| f.to_json()))
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    if let Some(path) = std::env::args().nth(1) {
        print!("{}", canonical(&path)?);
        return Ok(());
    }
    let file = ProblemFile::load(EX1)?;
    println!("n = {}, q = {}", file.n, file.q);
    let problem = file.problem()?;
    println!("m = {} graph rows", problem.m());

    // Integers and "p/q" strings are both accepted; the printer always writes strings.
    let text = file.to_json();
    assert_eq!(ProblemFile::parse(&text)?.to_json(), text);
    print!("{text}");

    let result = problem.solve()?;
    let solution = SolutionFile::from_result(&result, None);
    println!("solution file:");
    print!("{}", solution.to_json());

    // Diagnostics name the offending key.
    let broken = text.replace(
        "\"b\": [\"0\", \"0\", \"0\"]",
        "\"b\": [\"0\", \"1/0\", \"0\"]",
    );
    if let Err(e) = ProblemFile::parse(&broken) {
        println!("malformed input: {e}");
    }
    Ok(())
}
