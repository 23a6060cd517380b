//! The set relation `A¹ ≼_C A²  ⟺  A¹ + C ⊇ A² + C`.

use super::{Cone, VRep};
use crate::error::{Error, Result};

fn plus_cone(a: &VRep, c: &Cone) -> VRep {
    let mut rays = a.rays().to_vec();
    rays.extend(c.generators().iter().cloned());
    VRep::from_parts_unchecked(a.dim(), a.points().to_vec(), rays, a.lines().to_vec())
}

/// Whether `a1 + C ⊇ a2 + C`.
pub fn set_dominates(a1: &VRep, a2: &VRep, c: &Cone) -> Result<bool> {
    if a1.dim() != c.dim() {
        return Err(Error::dims("set relation", c.dim(), a1.dim()));
    }
    if a2.dim() != c.dim() {
        return Err(Error::dims("set relation", c.dim(), a2.dim()));
    }
    if a2.is_empty() {
        return Ok(true);
    }
    plus_cone(a1, c).to_hrep().contains(&plus_cone(a2, c))
}

/// Whether `family[i]` is C-minimal: every member dominating it is dominated
/// by it in turn.
pub fn c_minimal_in_family(family: &[VRep], c: &Cone, i: usize) -> Result<bool> {
    let candidate = family.get(i).ok_or(Error::IndexOutOfRange {
        index: i,
        len: family.len(),
    })?;
    for other in family {
        if set_dominates(other, candidate, c)? && !set_dominates(candidate, other, c)? {
            return Ok(false);
        }
    }
    Ok(true)
}
