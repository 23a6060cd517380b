//! Eliminating auxiliary variables by Fourier–Motzkin with redundancy removal.
//!
//! ```text
//! cargo run --example projection
//! ```

use polyset::io::GraphForm;
use polyset::io::{coordinate_names, display_hrep, ProblemFile};
use polyset::poly::HRep;

const EX5: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ex5.json");

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // {(y, z) : y1 >= z, y2 >= -z, z >= 0} projected onto y.
    let lifted = HRep::from_i64(3, &[&[1, 0, -1], &[0, 1, 1], &[0, 0, 1]], &[0, 0, 0]);
    let shadow = lifted.project(&[0, 1])?;
    println!(
        "shadow: {}",
        display_hrep(&shadow, &coordinate_names("y", 2))
    );

    // The graph of a lifted problem: four auxiliary variables vanish.
    let file = ProblemFile::load(EX5)?;
    if let GraphForm::P(p) = &file.graph {
        println!(
            "lifted rows: {}, auxiliary variables: {}",
            p.c.len(),
            p.mz.ncols()
        );
    }
    let problem = file.problem()?;
    let mut names = coordinate_names("x", problem.n());
    names.extend(coordinate_names("y", problem.q()));
    println!(
        "graph: {}",
        display_hrep(&problem.graph().without_redundancy(), &names)
    );

    // Redundant rows are dropped by LP.
    let noisy = HRep::from_i64(
        2,
        &[&[1, 0], &[1, 0], &[2, 0], &[1, 1], &[0, 1]],
        &[0, -1, 0, 0, 0],
    );
    println!(
        "reduced: {}",
        display_hrep(&noisy.without_redundancy(), &coordinate_names("y", 2))
    );
    Ok(())
}
