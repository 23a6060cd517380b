//! Exact simplex with independently checkable certificates.
//!
//! ```text
//! cargo run --example exact_lp
//! ```

use polyset::arith::{format_vector, int_vec, RatMatrix};
use polyset::io::display_rational;
use polyset::lp::{certify, LinearProgram, LpOutcome};

fn report(name: &str, lp: &LinearProgram) {
    let outcome = lp.solve();
    match &outcome {
        LpOutcome::Optimal {
            point,
            value,
            duals,
            ..
        } => println!(
            "{name}: optimal value {} at {}, duals {}",
            display_rational(value),
            format_vector(point),
            format_vector(duals)
        ),
        LpOutcome::Unbounded { point, ray } => println!(
            "{name}: unbounded from {} along {}",
            format_vector(point),
            format_vector(ray)
        ),
        LpOutcome::Infeasible { farkas, .. } => {
            println!(
                "{name}: infeasible, Farkas multipliers {}",
                format_vector(farkas)
            )
        }
    }
    println!("  certificate valid: {}", certify(lp, &outcome));
}

fn main() -> Result<(), polyset::error::Error> {
    // min x1 + x2  s.t.  x1 + 2 x2 >= 2, 2 x1 + x2 >= 2, x >= 0.
    let g = RatMatrix::from_i64(2, &[&[1, 2], &[2, 1], &[1, 0], &[0, 1]]);
    report(
        "fractional",
        &LinearProgram::new(int_vec(&[1, 1]), g, int_vec(&[2, 2, 0, 0]))?,
    );

    // min -x1  s.t.  x1 - x2 >= 0, x2 >= 0.
    let g = RatMatrix::from_i64(2, &[&[1, -1], &[0, 1]]);
    report(
        "unbounded",
        &LinearProgram::new(int_vec(&[-1, 0]), g, int_vec(&[0, 0]))?,
    );

    // x >= 1 and -x >= 0.
    let g = RatMatrix::from_i64(1, &[&[1], &[-1]]);
    report(
        "infeasible",
        &LinearProgram::new(int_vec(&[0]), g, int_vec(&[1, 0]))?,
    );

    // With an equality: min x1 s.t. x1 + x2 = 3, x >= 0.
    let g = RatMatrix::from_i64(2, &[&[1, 0], &[0, 1]]);
    let lp = LinearProgram::new(int_vec(&[1, 0]), g, int_vec(&[0, 0]))?
        .with_equalities(RatMatrix::from_i64(2, &[&[1, 1]]), int_vec(&[3]))?;
    report("equality", &lp);
    Ok(())
}
