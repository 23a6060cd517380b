//! Command-line front end. Every command writes results to `out` and
//! diagnostics to `err`, and returns the process exit code.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::arith::{format_rational, RatVector, Rational};
use crate::error::{Error, Result};
use crate::io::{
    coordinate_names, display_hrep, display_vector, display_vrep, parse_vector_arg,
    to_canonical_json, ProblemFile, SolutionFile,
};
use crate::poly::HRep;
use crate::setopt::{confirms_domination, Minimality, Problem, SolveResult};
use crate::vlp::condition3;

/// Exit code for unreadable or inconsistent input.
pub const EXIT_INPUT_ERROR: i32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "polyset",
    version,
    about = "Exact solver for polyhedral convex set optimization"
)]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Suppress result output; only the exit code reports the outcome.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide existence and compute a solution (exit 0 solution, 2 none, 3 infeasible).
    Solve {
        problem: PathBuf,
        /// Write the solution file here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report feasibility, boundedness and the existence conditions.
    Check { problem: PathBuf },
    /// Verify a solution file against a problem (exit 0 pass, 2 fail).
    Verify { problem: PathBuf, solution: PathBuf },
    /// Print the upper image in both representations.
    UpperImage { problem: PathBuf },
    /// Print F_C(x).
    Eval {
        problem: PathBuf,
        /// Components separated by commas or spaces, e.g. "1,-1/2".
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Decide whether x is a minimizing point or direction.
    Minimal {
        problem: PathBuf,
        #[command(flatten)]
        target: MinimalTarget,
    },
    /// Print the H-representation of the graph of F_C in (x, y).
    Project { problem: PathBuf },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct MinimalTarget {
    #[arg(long, allow_hyphen_values = true)]
    pub point: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub direction: Option<String>,
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let mut buffer = Vec::new();
    let code = match execute(&cli, &mut buffer) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT_ERROR;
        }
    };
    if !cli.quiet {
        let _ = out.write_all(&buffer);
    }
    code
}

fn load(path: &PathBuf) -> Result<(ProblemFile, Problem)> {
    let file = ProblemFile::load(path)?;
    let problem = file.problem()?;
    Ok((file, problem))
}

fn vector(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|x| Value::from(format_rational(x))).collect())
}

fn vectors(vs: &[RatVector]) -> Value {
    Value::Array(vs.iter().map(|v| vector(v)).collect())
}

fn emit_json(out: &mut Vec<u8>, value: &Value) -> Result<()> {
    out.write_all(to_canonical_json(value).as_bytes())
        .map_err(|e| Error::Io(e.to_string()))
}

fn line(out: &mut Vec<u8>, text: impl AsRef<str>) {
    out.extend_from_slice(text.as_ref().as_bytes());
    out.push(b'\n');
}

fn execute(cli: &Cli, out: &mut Vec<u8>) -> Result<i32> {
    match &cli.command {
        Command::Solve { problem, output } => solve(cli.json, problem, output.as_ref(), out),
        Command::Check { problem } => check(cli.json, problem, out),
        Command::Verify { problem, solution } => verify(cli.json, problem, solution, out),
        Command::UpperImage { problem } => upper_image(cli.json, problem, out),
        Command::Eval { problem, x } => eval(cli.json, problem, x, out),
        Command::Minimal { problem, target } => minimal(cli.json, problem, target, out),
        Command::Project { problem } => project(cli.json, problem, out),
    }
}

fn solve(json: bool, path: &PathBuf, output: Option<&PathBuf>, out: &mut Vec<u8>) -> Result<i32> {
    let (_, problem) = load(path)?;
    let result = problem.solve()?;
    let report = match &result {
        SolveResult::Solution { pair, .. } => Some(problem.verify(pair)?),
        _ => None,
    };
    let file = SolutionFile::from_result(&result, report);
    if let Some(target) = output {
        std::fs::write(target, file.to_json())
            .map_err(|e| Error::Io(format!("{}: {e}", target.display())))?;
    }
    if json {
        out.extend_from_slice(file.to_json().as_bytes());
    } else {
        line(out, format!("status: {}", file.status.as_str()));
        match &result {
            SolveResult::Infeasible => line(out, "the feasible set is empty"),
            SolveResult::NoSolution(w) => {
                line(out, format!("witness x = {}", display_vector(&w.x)));
                line(out, format!("        y = {}", display_vector(&w.y)));
                line(out, "(0⁺F_C)(x) strictly contains (0⁺F_C)(0): y lies in the former but not the latter");
            }
            SolveResult::Solution { pair, upper_image } => {
                for p in &pair.points {
                    line(out, format!("S̄ point     {}", display_vector(p)));
                }
                for d in &pair.directions {
                    line(out, format!("Ŝ direction {}", display_vector(d)));
                }
                let names = coordinate_names("y", problem.q());
                line(
                    out,
                    format!("upper image: {}", display_hrep(&upper_image.hrep, &names)),
                );
                if let Some(report) = &file.verification {
                    out.extend_from_slice(report.to_string().as_bytes());
                }
            }
        }
    }
    Ok(result.status().exit_code())
}

fn check(json: bool, path: &PathBuf, out: &mut Vec<u8>) -> Result<i32> {
    let (_, problem) = load(path)?;
    let feasible = problem.is_feasible();
    let details = if feasible {
        let bounded = problem.is_bounded()?;
        let prop4 = problem.prop4()?;
        let cond3 = condition3(&problem.upper_image().hrep, problem.cone())?;
        Some((bounded, prop4, cond3))
    } else {
        None
    };
    let flag_names = [
        "minimizer_for_some_point",
        "minimizer_for_every_point",
        "lp_optimal_for_some_point",
        "lp_optimal_for_every_point",
        "homogeneous_lp_optimal",
        "zero_minimizes_homogeneous",
    ];
    if json {
        let value = match &details {
            Some((bounded, prop4, cond3)) => {
                let flags: serde_json::Map<String, Value> = flag_names
                    .iter()
                    .zip(prop4.as_array())
                    .map(|(k, v)| (k.to_string(), Value::from(v)))
                    .collect();
                json!({"feasible": true, "bounded": bounded, "prop4": flags, "condition3": cond3})
            }
            None => json!({"feasible": false, "bounded": null, "prop4": null, "condition3": null}),
        };
        emit_json(out, &value)?;
    } else {
        line(out, format!("feasible: {feasible}"));
        match &details {
            Some((bounded, prop4, cond3)) => {
                line(out, format!("bounded: {bounded}"));
                for (name, value) in flag_names.iter().zip(prop4.as_array()) {
                    line(out, format!("prop4.{name}: {value}"));
                }
                line(out, format!("condition3: {cond3}"));
            }
            None => {
                line(out, "bounded: not applicable");
                for name in flag_names {
                    line(out, format!("prop4.{name}: not applicable"));
                }
                line(out, "condition3: not applicable");
            }
        }
    }
    Ok(0)
}

fn verify(json: bool, path: &PathBuf, solution: &PathBuf, out: &mut Vec<u8>) -> Result<i32> {
    let (_, problem) = load(path)?;
    let file = SolutionFile::load(solution)?;
    let report = problem.verify(&file.pair())?;
    if json {
        emit_json(
            out,
            &json!({
                "passed": report.passed(),
                "infimum_attained": report.infimum_attained,
                "points_minimizing": report.points_minimizing,
                "directions_minimizing": report.directions_minimizing,
                "issues": report.issues,
            }),
        )?;
    } else {
        out.extend_from_slice(report.to_string().as_bytes());
        line(out, if report.passed() { "pass" } else { "fail" });
    }
    Ok(if report.passed() { 0 } else { 2 })
}

fn hrep_json(h: &HRep) -> Value {
    let rows: Vec<RatVector> = h.rows().map(|(r, _)| r.to_vec()).collect();
    json!({"M": vectors(&rows), "v": vector(h.rhs())})
}

fn upper_image(json: bool, path: &PathBuf, out: &mut Vec<u8>) -> Result<i32> {
    let (_, problem) = load(path)?;
    let u = problem.upper_image();
    if json {
        emit_json(
            out,
            &json!({
                "hrep": hrep_json(&u.hrep),
                "points": vectors(u.vrep.points()),
                "rays": vectors(u.vrep.rays()),
                "lines": vectors(u.vrep.lines()),
            }),
        )?;
    } else {
        let names = coordinate_names("y", problem.q());
        if u.vrep.is_empty() {
            line(out, "empty");
        } else {
            line(out, display_hrep(&u.hrep, &names));
            line(out, display_vrep(&u.vrep));
        }
    }
    Ok(0)
}

fn eval(json: bool, path: &PathBuf, x: &str, out: &mut Vec<u8>) -> Result<i32> {
    let (_, problem) = load(path)?;
    let x = parse_vector_arg(x)?;
    let value = problem.evaluate(&x)?;
    let in_domain = !value.is_empty();
    let value = value.without_redundancy();
    if json {
        emit_json(
            out,
            &json!({"in_domain": in_domain, "hrep": hrep_json(&value)}),
        )?;
    } else if in_domain {
        line(
            out,
            display_hrep(&value, &coordinate_names("y", problem.q())),
        );
    } else {
        line(out, "empty (x is outside dom F)");
    }
    Ok(0)
}

fn minimal(json: bool, path: &PathBuf, target: &MinimalTarget, out: &mut Vec<u8>) -> Result<i32> {
    let (_, problem) = load(path)?;
    let (kind, verdict, checked) = match (&target.point, &target.direction) {
        (Some(p), _) => {
            let p = parse_vector_arg(p)?;
            let verdict = problem.minimality(&p)?;
            let checked = match &verdict {
                Minimality::Dominated { x, y } => confirms_domination(&problem, &p, x, y)?,
                Minimality::Minimal => true,
            };
            ("point", verdict, checked)
        }
        (_, Some(d)) => {
            let d = parse_vector_arg(d)?;
            let hom = problem.homogeneous();
            let verdict = hom.direction_minimality(&d).map_err(|e| match e {
                Error::ZeroDirection => Error::format(
                    "--direction",
                    "a minimizing direction must be nonzero (Ŝ ⊆ dom(0⁺F) \\ {0})",
                ),
                other => other,
            })?;
            let checked = match &verdict {
                Minimality::Dominated { x, y } => confirms_domination(&hom, &d, x, y)?,
                Minimality::Minimal => true,
            };
            ("direction", verdict, checked)
        }
        _ => unreachable!("clap requires exactly one target"),
    };
    if json {
        let value = match &verdict {
            Minimality::Minimal => json!({"kind": kind, "minimal": true}),
            Minimality::Dominated { x, y } => json!({
                "kind": kind,
                "minimal": false,
                "dominating_x": vector(x),
                "separating_y": vector(y),
                "certificate_checked": checked,
            }),
        };
        emit_json(out, &value)?;
    } else {
        match &verdict {
            Minimality::Minimal => line(out, "true"),
            Minimality::Dominated { x, y } => {
                line(out, "false");
                line(
                    out,
                    format!(
                        "certificate: x = {} gives a strictly larger value; y = {} lies only in the larger set (re-checked: {})",
                        display_vector(x),
                        display_vector(y),
                        checked
                    ),
                );
            }
        }
    }
    Ok(0)
}

fn project(json: bool, path: &PathBuf, out: &mut Vec<u8>) -> Result<i32> {
    let (_, problem) = load(path)?;
    let graph = problem.graph().without_redundancy();
    if json {
        emit_json(
            out,
            &json!({"n": problem.n(), "q": problem.q(), "hrep": hrep_json(&graph)}),
        )?;
    } else {
        let mut names = coordinate_names("x", problem.n());
        names.extend(coordinate_names("y", problem.q()));
        line(out, display_hrep(&graph, &names));
    }
    Ok(0)
}
