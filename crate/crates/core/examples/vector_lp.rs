//! Vector linear programs as set optimization problems with single-valued
//! objectives, and the lineality test that decides their solvability.
//!
//! ```text
//! cargo run --example vector_lp
//! ```

use polyset::arith::{int_vec, RatMatrix};
use polyset::io::{coordinate_names, display_hrep, ProblemFile};
use polyset::poly::Cone;
use polyset::setopt::SolveResult;
use polyset::vlp::{condition3, VlpProblem};

const VLP: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/vlp.json");
const EX5: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ex5.json");

fn describe(name: &str, vlp: &VlpProblem) -> Result<(), polyset::error::Error> {
    let problem = vlp.to_setopt()?;
    let status = match problem.solve()? {
        SolveResult::Infeasible => "infeasible",
        SolveResult::NoSolution(_) => "no solution",
        SolveResult::Solution { .. } => "solution",
    };
    println!(
        "{name}: lineality test {} / solver: {status}",
        vlp.cor2_exists()?
    );
    if problem.is_feasible() {
        println!(
            "  upper image: {}",
            display_hrep(&problem.upper_image().hrep, &coordinate_names("y", vlp.q()))
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let from_file = ProblemFile::load(VLP)?.vlp()?.expect("vlp form");
    describe("vlp.json", &from_file)?;

    // min (x1, x2) over x1 + x2 >= 0: the image is a half-plane whose line
    // meets -C only at the origin, so solutions exist.
    let halfplane = VlpProblem::new(
        RatMatrix::identity(2),
        RatMatrix::from_i64(2, &[&[1, 1]]),
        int_vec(&[0]),
        Cone::nonnegative_orthant(2),
    )?;
    describe("half-plane", &halfplane)?;

    // min (x1, x2) over x2 >= 0: the line along y1 points into -C.
    let strip = VlpProblem::new(
        RatMatrix::identity(2),
        RatMatrix::from_i64(2, &[&[0, 1]]),
        int_vec(&[0]),
        Cone::nonnegative_orthant(2),
    )?;
    describe("upper half-plane", &strip)?;

    // The lineality test is not enough beyond vector problems.
    let ex5 = ProblemFile::load(EX5)?.problem()?;
    println!(
        "ex5: lineality test {} but solvable {}",
        condition3(&ex5.upper_image().hrep, ex5.cone())?,
        matches!(ex5.solve()?, SolveResult::Solution { .. })
    );
    Ok(())
}
