//! Independent verification of a candidate solution.

use std::fmt;

use super::{Problem, SolutionPair};
use crate::arith::{self, format_vector};
use crate::error::{Error, Result};
use crate::poly::{minkowski_and_hulls, VRep};

/// Outcome of the three solution checks. Failures are recorded, not raised.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// `P = C + conv ⋃_{S̄} F(x) + cone ⋃_{Ŝ} (0⁺F)(x)` holds exactly.
    pub infimum_attained: bool,
    /// Every element of `S̄` is a minimizing point.
    pub points_minimizing: bool,
    /// Every element of `Ŝ` is a minimizing direction.
    pub directions_minimizing: bool,
    pub issues: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.infimum_attained && self.points_minimizing && self.directions_minimizing
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |ok: bool| if ok { "pass" } else { "FAIL" };
        writeln!(f, "infimum attained:       {}", mark(self.infimum_attained))?;
        writeln!(
            f,
            "minimizing points:      {}",
            mark(self.points_minimizing)
        )?;
        writeln!(
            f,
            "minimizing directions:  {}",
            mark(self.directions_minimizing)
        )?;
        for issue in &self.issues {
            writeln!(f, "  - {issue}")?;
        }
        Ok(())
    }
}

impl Problem {
    pub fn verify(&self, pair: &SolutionPair) -> Result<VerificationReport> {
        for x in pair.points.iter().chain(&pair.directions) {
            if x.len() != self.n() {
                return Err(Error::dims("solution vector", self.n(), x.len()));
            }
        }
        let hom = self.homogeneous();
        let mut issues = Vec::new();

        let mut points_minimizing = true;
        let mut point_values = Vec::new();
        for x in &pair.points {
            let value = self.evaluate(x)?.to_vrep();
            if value.is_empty() {
                issues.push(format!("point {} is outside dom F", format_vector(x)));
                points_minimizing = false;
                continue;
            }
            point_values.push(value);
            if !self.is_minimizing_point(x)? {
                issues.push(format!("point {} is not a minimizer", format_vector(x)));
                points_minimizing = false;
            }
        }

        let mut directions_minimizing = true;
        let mut direction_values: Vec<VRep> = Vec::new();
        for x in &pair.directions {
            if arith::is_zero_vec(x) {
                issues.push("zero vector listed as a direction".to_string());
                directions_minimizing = false;
                continue;
            }
            let value = hom.evaluate(x)?.to_vrep();
            if value.is_empty() {
                issues.push(format!("direction {} is outside dom 0⁺F", format_vector(x)));
                directions_minimizing = false;
                continue;
            }
            direction_values.push(value);
            if !self.is_minimizing_direction(x)? {
                issues.push(format!(
                    "direction {} is not a minimizing direction",
                    format_vector(x)
                ));
                directions_minimizing = false;
            }
        }

        let infimum_attained = if pair.points.is_empty() {
            issues.push("no minimizing points given".to_string());
            false
        } else if point_values.len() != pair.points.len()
            || direction_values.len() != pair.directions.len()
        {
            false
        } else {
            let mut cone_gens = self.cone().generators().to_vec();
            for value in &direction_values {
                cone_gens.extend(value.points().iter().cloned());
                cone_gens.extend(value.direction_generators());
            }
            let hull = minkowski_and_hulls(&point_values, &cone_gens)?;
            let attained = self.upper_image().hrep.equals(&hull)?;
            if !attained {
                issues.push("infimum not attained".to_string());
            }
            attained
        };

        Ok(VerificationReport {
            infimum_attained,
            points_minimizing,
            directions_minimizing,
            issues,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::SolveResult;
    use super::*;
    use crate::arith::int_vec;

    #[test]
    fn solved_example1_verifies() {
        let p = example1();
        let SolveResult::Solution { pair, .. } = p.solve().unwrap() else {
            unreachable!()
        };
        let report = p.verify(&pair).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn origin_alone_does_not_attain_example1() {
        let p = example1();
        let pair = SolutionPair {
            points: vec![int_vec(&[0])],
            directions: vec![],
        };
        let report = p.verify(&pair).unwrap();
        assert!(!report.infimum_attained);
        assert!(report.points_minimizing);
        assert!(report.issues.iter().any(|s| s == "infimum not attained"));
    }

    #[test]
    fn example5_candidate_fails_minimality() {
        let p = example5();
        let pair = SolutionPair {
            points: vec![int_vec(&[0])],
            directions: vec![int_vec(&[1])],
        };
        let report = p.verify(&pair).unwrap();
        assert!(!report.points_minimizing);
        assert!(!report.directions_minimizing);
        assert!(!report.passed());
    }

    #[test]
    fn malformed_pairs() {
        let p = example1();
        let wrong_dim = SolutionPair {
            points: vec![int_vec(&[0, 0])],
            directions: vec![],
        };
        assert!(p.verify(&wrong_dim).is_err());
        let outside = SolutionPair {
            points: vec![int_vec(&[-1])],
            directions: vec![int_vec(&[0])],
        };
        let report = p.verify(&outside).unwrap();
        assert!(!report.passed());
        assert!(!report.points_minimizing && !report.directions_minimizing);
    }
}
