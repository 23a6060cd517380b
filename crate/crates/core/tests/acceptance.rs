//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints exactly one PASS or FAIL line.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use num_traits::Zero;
use polyset::arith::zeros;
use polyset::cli;
use polyset::io::{FamilyFile, ProblemFile};
use polyset::lp::{certify, LpOutcome};
use polyset::poly::{c_minimal_in_family, HRep};
use polyset::setopt::SolveResult;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["polyset"];
    argv.extend_from_slice(args);
    let code = cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap(),
    )
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent < limit, format!("took {spent:?}, limit {limit:?}"))
}

fn example5_golden() -> Outcome {
    let start = Instant::now();
    let path = fixture("ex5.json");
    let path = path.to_str().unwrap();
    let (code, text) = run_cli(&["check", path]);
    ensure(code == 0, format!("check exit {code}"))?;
    for expected in ["feasible: true", "bounded: false", "condition3: true"] {
        ensure(
            text.lines().any(|l| l == expected),
            format!("missing `{expected}`"),
        )?;
    }
    let prop4_lines: Vec<&str> = text.lines().filter(|l| l.starts_with("prop4.")).collect();
    ensure(
        prop4_lines.len() == 6 && prop4_lines.iter().all(|l| l.ends_with(": false")),
        "prop4 flags not all false",
    )?;
    let (code, _) = run_cli(&["solve", path]);
    ensure(
        code == 2,
        format!("solve exit {code}, expected 2 (no solution)"),
    )?;
    let problem = ProblemFile::load(fixture("ex5.json"))
        .unwrap()
        .problem()
        .unwrap();
    let expected = HRep::from_i64(2, &[&[1, 2], &[1, 0]], &[0, 0]);
    ensure(
        same_set(&problem.upper_image().hrep, &expected),
        "upper image differs from {y1 + 2y2 >= 0, y1 >= 0}",
    )?;
    within(start, Duration::from_secs(1))?;
    Ok(format!(
        "no solution, exact upper image, {:?}",
        start.elapsed()
    ))
}

fn example1_golden() -> Outcome {
    let start = Instant::now();
    let path = fixture("ex1.json");
    let path = path.to_str().unwrap();
    let problem = ProblemFile::load(path).unwrap().problem().unwrap();
    ensure(!problem.is_bounded().unwrap(), "reported bounded")?;
    let lp = problem.build_lp(&zeros(2)).unwrap();
    let outcome = lp.solve();
    match &outcome {
        LpOutcome::Optimal { value, .. } => ensure(value.is_zero(), format!("LP value {value}"))?,
        other => return Err(format!("LP(0, 0) not optimal: {:?}", other.status())),
    }
    ensure(certify(&lp, &outcome), "LP certificate rejected")?;
    let dir = tempfile::tempdir().unwrap();
    let sol = dir.path().join("ex1.solution.json");
    let (code, _) = run_cli(&["--quiet", "solve", path, "-o", sol.to_str().unwrap()]);
    ensure(code == 0, format!("solve exit {code}"))?;
    let (code, text) = run_cli(&["verify", path, sol.to_str().unwrap()]);
    ensure(code == 0, format!("verify exit {code}: {text}"))?;
    ensure(
        !text.contains("FAIL") && text.trim_end().ends_with("pass"),
        text.clone(),
    )?;
    within(start, Duration::from_secs(1))?;
    Ok(format!(
        "unbounded, LP(0,0) = 0, solution verified, {:?}",
        start.elapsed()
    ))
}

fn example4_golden() -> Outcome {
    let family = FamilyFile::load(fixture("ex4-family.json")).unwrap();
    let sets = family.set_vreps().unwrap();
    let minimal = |cone: &str| -> Vec<bool> {
        let c = family.cone(cone).unwrap().unwrap();
        (0..sets.len())
            .map(|i| c_minimal_in_family(&sets, &c, i).unwrap())
            .collect()
    };
    let (c1, c2, c3) = (minimal("C1"), minimal("C2"), minimal("C3"));
    ensure(c2 == [true, true, true], format!("C2: {c2:?}"))?;
    ensure(!c3[2], "A3 is C3-minimal")?;
    ensure(!c1[0], "A1 is C1-minimal")?;
    Ok(format!("C1 {c1:?}, C2 {c2:?}, C3 {c3:?}"))
}

fn prop4_equivalence() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(4);
    let (mut yes, mut no) = (0, 0);
    for k in 0..100 {
        let p = random_problem(&mut rng);
        let flags = p.prop4().unwrap();
        ensure(
            flags.agree(),
            format!("instance {k}: {:?}", flags.as_array()),
        )?;
        if flags.all_true() {
            yes += 1;
        } else {
            no += 1;
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "100 instances ({yes} solvable, {no} not), {:?}",
        start.elapsed()
    ))
}

fn bounded_problems_solve() -> Outcome {
    let mut rng = rng(5);
    let mut found = 0;
    let mut tries = 0;
    while found < 50 {
        tries += 1;
        ensure(tries < 5000, "too few bounded instances generated")?;
        let p = random_boxed_problem(&mut rng);
        if !p.is_bounded().unwrap() {
            continue;
        }
        found += 1;
        match p.solve().unwrap() {
            SolveResult::Solution { pair, .. } => {
                let report = p.verify(&pair).unwrap();
                ensure(report.passed(), format!("verify failed:\n{report}"))?;
            }
            other => return Err(format!("bounded instance without solution: {other:?}")),
        }
    }
    Ok(format!(
        "50 bounded instances solved and verified ({tries} generated)"
    ))
}

fn vlp_cross_check() -> Outcome {
    let mut rng = rng(6);
    let mut counts = [0usize; 3];
    for k in 0..100 {
        let v = random_vlp(&mut rng);
        let status = v.to_setopt().unwrap().solve().unwrap();
        let solved = matches!(status, SolveResult::Solution { .. });
        ensure(
            v.cor2_exists().unwrap() == solved,
            format!("instance {k}: {v:?}"),
        )?;
        counts[match status {
            SolveResult::Solution { .. } => 0,
            SolveResult::NoSolution(_) => 1,
            SolveResult::Infeasible => 2,
        }] += 1;
    }
    Ok(format!(
        "100 VLPs agree (solution {}, no solution {}, infeasible {})",
        counts[0], counts[1], counts[2]
    ))
}

fn oracle_suites() -> Outcome {
    let mut rng = rng(7);
    for k in 0..100 {
        let dim = 1 + k % 3;
        let rows = 1 + (k * 7) % 5;
        let p = random_hrep(&mut rng, dim, rows, 3);
        let back = p.to_vrep().to_hrep();
        ensure(same_set(&p, &back), format!("(a) round trip {k}"))?;
    }
    for k in 0..50 {
        let dim = 2 + k % 3;
        let p = random_hrep(&mut rng, dim, 2 + k % 4, 3);
        let keep: Vec<usize> = (0..dim - 1).collect();
        let fm = p.project(&keep).unwrap();
        let route = project_by_generators(&p, &keep);
        ensure(
            fm.equals(&route).unwrap(),
            format!("(b) projection {k} differs"),
        )?;
    }
    let mut statuses = [0usize; 3];
    for k in 0..100 {
        let lp = random_lp(&mut rng);
        let outcome = lp.solve();
        let brute = brute_force_lp(lp.objective(), lp.constraints(), lp.rhs());
        ensure(
            classify(&outcome) == brute,
            format!("(c) LP {k}: {:?} vs {brute:?}", outcome.status()),
        )?;
        ensure(certify(&lp, &outcome), format!("(d) LP {k} certificate"))?;
        statuses[match brute {
            BruteLp::Optimal(_) => 0,
            BruteLp::Unbounded => 1,
            BruteLp::Infeasible => 2,
        }] += 1;
    }
    Ok(format!(
        "(a) 100 round trips, (b) 50 projections, (c)+(d) 100 LPs: {} optimal, {} unbounded, {} infeasible",
        statuses[0], statuses[1], statuses[2]
    ))
}

fn minimality_double_check() -> Outcome {
    let mut rng = rng(8);
    let (mut found, mut checked) = (0, 0);
    while found < 50 {
        let p = random_problem(&mut rng);
        if !p.prop4().unwrap().all_true() {
            continue;
        }
        found += 1;
        for ybar in p.upper_image().vrep.points() {
            let lp = p.build_lp(ybar).unwrap();
            let outcome = lp.solve();
            ensure(certify(&lp, &outcome), "LP certificate rejected")?;
            let LpOutcome::Optimal { point, .. } = outcome else {
                return Err("LP(ȳ) not optimal although prop4 holds".into());
            };
            let xbar = &point[..p.n()];
            ensure(
                p.is_minimizing_point(xbar).unwrap(),
                format!("x̄ = {xbar:?} not minimal"),
            )?;
            checked += 1;
        }
    }
    Ok(format!(
        "50 instances, {checked} extracted minimizers confirmed"
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("example 5 golden", example5_golden),
        ("example 1 golden", example1_golden),
        ("example 4 golden", example4_golden),
        ("existence conditions agree", prop4_equivalence),
        ("feasible bounded problems solve", bounded_problems_solve),
        ("vector LP lineality test", vlp_cross_check),
        ("oracle suites", oracle_suites),
        ("minimality double check", minimality_double_check),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        match result {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
