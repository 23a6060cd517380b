//! Deciding whether a point or a direction is minimizing, with a checked
//! domination certificate when it is not.
//!
//! ```text
//! cargo run --example minimality
//! ```

use polyset::arith::int_vec;
use polyset::io::{display_vector, ProblemFile};
use polyset::setopt::{confirms_domination, Minimality};

const EX1: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ex1.json");
const EX5: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ex5.json");

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ex1 = ProblemFile::load(EX1)?.problem()?;
    let ex5 = ProblemFile::load(EX5)?.problem()?;

    for x in [0, 1, 3] {
        println!(
            "ex1: x = {x} minimizing point: {}",
            ex1.is_minimizing_point(&int_vec(&[x]))?
        );
    }
    println!(
        "ex1: direction 1 minimizing: {}",
        ex1.is_minimizing_direction(&int_vec(&[1]))?
    );

    let hom = ex5.homogeneous();
    let zero = int_vec(&[0]);
    match hom.minimality(&zero)? {
        Minimality::Minimal => println!("ex5 (homogeneous): 0 is minimal"),
        Minimality::Dominated { x, y } => {
            println!(
                "ex5 (homogeneous): 0 is dominated by x = {}, y = {} separates",
                display_vector(&x),
                display_vector(&y)
            );
            println!(
                "certificate confirmed: {}",
                confirms_domination(&hom, &zero, &x, &y)?
            );
        }
    }
    println!(
        "ex5: direction 1 minimizing: {}",
        ex5.is_minimizing_direction(&int_vec(&[1]))?
    );
    Ok(())
}
