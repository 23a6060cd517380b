//! Vector linear programs `min_C M x  s.t.  A x >= b` as set optimization
//! problems with `F(x) = {M x}` on the feasible set.

use crate::arith::{self, nullspace, RatMatrix, RatVector};
use crate::error::{Error, Result};
use crate::poly::{Cone, HRep};
use crate::setopt::Problem;

#[derive(Debug, Clone, PartialEq)]
pub struct VlpProblem {
    /// Objective matrix, `q × n`.
    pub objective: RatMatrix,
    pub constraints: RatMatrix,
    pub rhs: RatVector,
    pub cone: Cone,
}

impl VlpProblem {
    pub fn new(
        objective: RatMatrix,
        constraints: RatMatrix,
        rhs: RatVector,
        cone: Cone,
    ) -> Result<Self> {
        if objective.nrows() != cone.dim() {
            return Err(Error::dims("objective rows", cone.dim(), objective.nrows()));
        }
        if constraints.ncols() != objective.ncols() {
            return Err(Error::dims(
                "constraint columns",
                objective.ncols(),
                constraints.ncols(),
            ));
        }
        if constraints.nrows() != rhs.len() {
            return Err(Error::dims(
                "constraint right-hand side",
                constraints.nrows(),
                rhs.len(),
            ));
        }
        Ok(VlpProblem {
            objective,
            constraints,
            rhs,
            cone,
        })
    }

    pub fn n(&self) -> usize {
        self.objective.ncols()
    }

    pub fn q(&self) -> usize {
        self.objective.nrows()
    }

    /// Rows `A x >= b` and `G (y - M x) >= 0`, where `G y >= 0` describes `C`.
    pub fn to_setopt(&self) -> Result<Problem> {
        let (n, q) = (self.n(), self.q());
        let g = self.cone.hrep().matrix();
        let mut a = self.constraints.clone();
        let mut b = RatMatrix::zeros(self.constraints.nrows(), q);
        let mut rhs = self.rhs.clone();
        let gm = g.mul(&self.objective)?.neg();
        for r in 0..g.nrows() {
            a.push_row(gm.row(r))?;
            b.push_row(g.row(r))?;
            rhs.push(arith::int(0));
        }
        debug_assert_eq!(a.ncols(), n);
        Problem::new(a, b, rhs, self.cone.clone())
    }

    /// Feasibility together with `L(P) ∩ (−C) ⊆ C`; characterizes existence
    /// of a solution for vector linear programs.
    pub fn cor2_exists(&self) -> Result<bool> {
        let problem = self.to_setopt()?;
        if !problem.is_feasible() {
            return Ok(false);
        }
        condition3(&problem.upper_image().hrep, &self.cone)
    }
}

/// `L(P) ∩ (−C) ⊆ C`.
pub fn condition3(upper: &HRep, cone: &Cone) -> Result<bool> {
    if upper.dim() != cone.dim() {
        return Err(Error::dims("condition (3)", cone.dim(), upper.dim()));
    }
    let q = upper.dim();
    let lineality = upper.lineality_space()?;
    // span L = {y : N y = 0} with N spanning the orthogonal complement.
    let complement = nullspace(&lineality, q);
    let mut rows: Vec<RatVector> = cone.hrep().matrix().rows().map(arith::neg).collect();
    for v in &complement {
        rows.push(v.clone());
        rows.push(arith::neg(v));
    }
    let intersection = HRep::homogeneous(RatMatrix::from_rows(q, rows)?);
    Ok(intersection
        .to_vrep()
        .direction_generators()
        .iter()
        .all(|d| cone.contains(d)))
}
