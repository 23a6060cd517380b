//! The set relation `A1 + C ⊇ A2 + C` and minimal elements of a family of
//! sets under three nested ordering cones.
//!
//! ```text
//! cargo run --example set_relations
//! ```

use polyset::io::FamilyFile;
use polyset::poly::{c_minimal_in_family, set_dominates};

const FAMILY: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ex4-family.json");

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let family = FamilyFile::load(FAMILY)?;
    let sets = family.set_vreps()?;
    for (cone_name, _) in &family.cones {
        let cone = family.cone(cone_name).expect("listed")?;
        println!("ordering cone {cone_name}:");
        for (i, (name, _)) in family.sets.iter().enumerate() {
            let better: Vec<&str> = family
                .sets
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .filter(|&(j, _)| set_dominates(&sets[j], &sets[i], &cone).unwrap_or(false))
                .map(|(_, (n, _))| n.as_str())
                .collect();
            println!(
                "  {name}: minimal = {}, improved on by {:?}",
                c_minimal_in_family(&sets, &cone, i)?,
                better
            );
        }
    }
    Ok(())
}
