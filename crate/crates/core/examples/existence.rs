//! Existence of solutions: the six equivalent conditions, the solver and the
//! independent verifier on a solvable and an unsolvable problem.
//!
//! ```text
//! cargo run --example existence
//! ```

use polyset::io::{coordinate_names, display_hrep, display_vector, ProblemFile};
use polyset::setopt::SolveResult;

const FILES: [&str; 2] = [
    concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ex1.json"),
    concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ex5.json"),
];

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for path in FILES {
        let problem = ProblemFile::load(path)?.problem()?;
        let names = coordinate_names("y", problem.q());
        println!("== {}", path.rsplit('/').next().unwrap_or(path));
        println!(
            "upper image: {}",
            display_hrep(&problem.upper_image().hrep, &names)
        );
        println!("bounded: {}", problem.is_bounded()?);
        let flags = problem.prop4()?;
        println!(
            "existence conditions: {:?} (agree: {})",
            flags.as_array(),
            flags.agree()
        );
        match problem.solve()? {
            SolveResult::Infeasible => println!("infeasible"),
            SolveResult::NoSolution(w) => {
                println!(
                    "no solution; witness x = {}, y = {}",
                    display_vector(&w.x),
                    display_vector(&w.y)
                );
                println!("witness valid: {}", w.check(&problem));
            }
            SolveResult::Solution { pair, .. } => {
                println!(
                    "points {:?}",
                    pair.points
                        .iter()
                        .map(|p| display_vector(p))
                        .collect::<Vec<_>>()
                );
                println!(
                    "directions {:?}",
                    pair.directions
                        .iter()
                        .map(|d| display_vector(d))
                        .collect::<Vec<_>>()
                );
                print!("{}", problem.verify(&pair)?);
            }
        }
    }
    Ok(())
}
