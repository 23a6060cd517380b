//! Converting between inequality and generator descriptions of polyhedra.
//!
//! ```text
//! cargo run --example double_description
//! ```

use polyset::arith::format_vector;
use polyset::io::{coordinate_names, display_hrep, display_vrep};
use polyset::poly::HRep;

fn main() -> Result<(), polyset::error::Error> {
    let names = coordinate_names("y", 2);

    // y1 >= 0, y1 + 2 y2 >= 0: a pointed cone with apex at the origin.
    let cone = HRep::from_i64(2, &[&[1, 0], &[1, 2]], &[0, 0]);
    let v = cone.to_vrep();
    println!("{}\n  -> {}", display_hrep(&cone, &names), display_vrep(&v));
    println!("  back -> {}", display_hrep(&v.to_hrep(), &names));

    // A half-plane y1 + y2 >= 1 has a line in it.
    let half = HRep::from_i64(2, &[&[1, 1]], &[1]);
    let v = half.to_vrep();
    println!("{}\n  -> {}", display_hrep(&half, &names), display_vrep(&v));
    for l in half.lineality_space()? {
        println!("  lineality direction {}", format_vector(&l));
    }

    // A square: four vertices, no directions.
    let square = HRep::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]], &[0, -1, 0, -1]);
    println!(
        "{}\n  -> {}",
        display_hrep(&square, &names),
        display_vrep(&square.to_vrep())
    );

    // Recession cone of a shifted wedge.
    let wedge = HRep::from_i64(2, &[&[1, 0], &[0, 1]], &[1, -2]);
    let rec = wedge.recession_cone();
    println!(
        "recession cone of {}: {}",
        display_hrep(&wedge, &names),
        display_hrep(&rec.cone, &names)
    );

    // Equality of two descriptions of the same set.
    assert!(cone.equals(&cone.to_vrep().to_hrep().to_vrep())?);
    Ok(())
}
