//! Exact linear programming with machine-checkable certificates.
//!
//! Programs are stated over free variables as `min c·z` subject to
//! `G z >= h` and optionally `E z = f`. Every outcome carries a certificate
//! that [`certify`] re-checks by direct arithmetic.

mod simplex;

use num_traits::{Signed, Zero};

use crate::arith::{dot, mat_vec, RatMatrix, RatVector, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    objective: RatVector,
    constraints: RatMatrix,
    rhs: RatVector,
    equalities: RatMatrix,
    eq_rhs: RatVector,
}

impl LinearProgram {
    /// `min objective·z  s.t.  constraints·z >= rhs`.
    pub fn new(objective: RatVector, constraints: RatMatrix, rhs: RatVector) -> Result<Self> {
        if constraints.ncols() != objective.len() {
            return Err(Error::dims(
                "LP columns",
                objective.len(),
                constraints.ncols(),
            ));
        }
        if constraints.nrows() != rhs.len() {
            return Err(Error::dims(
                "LP right-hand side",
                constraints.nrows(),
                rhs.len(),
            ));
        }
        let nvars = objective.len();
        Ok(LinearProgram {
            objective,
            constraints,
            rhs,
            equalities: RatMatrix::zeros(0, nvars),
            eq_rhs: Vec::new(),
        })
    }

    /// Adds `equalities·z = eq_rhs`.
    pub fn with_equalities(mut self, equalities: RatMatrix, eq_rhs: RatVector) -> Result<Self> {
        if equalities.ncols() != self.num_vars() {
            return Err(Error::dims(
                "LP equality columns",
                self.num_vars(),
                equalities.ncols(),
            ));
        }
        if equalities.nrows() != eq_rhs.len() {
            return Err(Error::dims(
                "LP equality right-hand side",
                equalities.nrows(),
                eq_rhs.len(),
            ));
        }
        self.equalities = equalities;
        self.eq_rhs = eq_rhs;
        Ok(self)
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn objective(&self) -> &[Rational] {
        &self.objective
    }

    pub fn constraints(&self) -> &RatMatrix {
        &self.constraints
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    pub fn equalities(&self) -> &RatMatrix {
        &self.equalities
    }

    pub fn eq_rhs(&self) -> &[Rational] {
        &self.eq_rhs
    }

    pub fn solve(&self) -> LpOutcome {
        simplex::solve(self)
    }

    /// Whether `z` satisfies every constraint.
    pub fn is_feasible_point(&self, z: &[Rational]) -> bool {
        z.len() == self.num_vars()
            && self
                .constraints
                .rows()
                .zip(&self.rhs)
                .all(|(row, h)| dot(row, z) >= *h)
            && self
                .equalities
                .rows()
                .zip(&self.eq_rhs)
                .all(|(row, f)| dot(row, z) == *f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal {
        point: RatVector,
        value: Rational,
        /// One nonnegative multiplier per inequality row.
        duals: RatVector,
        /// One free multiplier per equality row.
        eq_duals: RatVector,
    },
    Unbounded {
        point: RatVector,
        /// Feasible direction along which the objective strictly decreases.
        ray: RatVector,
    },
    Infeasible {
        /// `λ >= 0` with `λᵀG + μᵀE = 0` and `λᵀh + μᵀf > 0`.
        farkas: RatVector,
        eq_farkas: RatVector,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LpStatus {
    Optimal,
    Unbounded,
    Infeasible,
}

impl LpOutcome {
    pub fn status(&self) -> LpStatus {
        match self {
            LpOutcome::Optimal { .. } => LpStatus::Optimal,
            LpOutcome::Unbounded { .. } => LpStatus::Unbounded,
            LpOutcome::Infeasible { .. } => LpStatus::Infeasible,
        }
    }

    pub fn is_optimal(&self) -> bool {
        matches!(self, LpOutcome::Optimal { .. })
    }

    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible { .. })
    }

    pub fn point(&self) -> Option<&[Rational]> {
        match self {
            LpOutcome::Optimal { point, .. } | LpOutcome::Unbounded { point, .. } => Some(point),
            LpOutcome::Infeasible { .. } => None,
        }
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }
}

/// `Σ multipliers_i · rows_i`, the transpose product.
fn combine(m: &RatMatrix, multipliers: &[Rational], out: &mut [Rational]) {
    for (row, w) in m.rows().zip(multipliers) {
        if w.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(row) {
            *o += w * x;
        }
    }
}

/// Re-checks every certificate invariant of `outcome` against `lp` using only
/// exact arithmetic on the original data.
pub fn certify(lp: &LinearProgram, outcome: &LpOutcome) -> bool {
    let n = lp.num_vars();
    let rows = lp.constraints.nrows();
    let eq_rows = lp.equalities.nrows();
    match outcome {
        LpOutcome::Optimal {
            point,
            value,
            duals,
            eq_duals,
        } => {
            if point.len() != n || duals.len() != rows || eq_duals.len() != eq_rows {
                return false;
            }
            if !lp.is_feasible_point(point) || duals.iter().any(Signed::is_negative) {
                return false;
            }
            let mut reduced = vec![Rational::zero(); n];
            combine(&lp.constraints, duals, &mut reduced);
            combine(&lp.equalities, eq_duals, &mut reduced);
            if reduced != lp.objective {
                return false;
            }
            let slack = mat_vec(&lp.constraints, point).expect("checked dimensions");
            let complementary = slack
                .iter()
                .zip(&lp.rhs)
                .zip(duals)
                .all(|((s, h), d)| d.is_zero() || s == h);
            let dual_value = dot(duals, &lp.rhs) + dot(eq_duals, &lp.eq_rhs);
            complementary && dot(&lp.objective, point) == *value && dual_value == *value
        }
        LpOutcome::Unbounded { point, ray } => {
            if point.len() != n || ray.len() != n || !lp.is_feasible_point(point) {
                return false;
            }
            lp.constraints
                .rows()
                .all(|row| !dot(row, ray).is_negative())
                && lp.equalities.rows().all(|row| dot(row, ray).is_zero())
                && dot(&lp.objective, ray).is_negative()
        }
        LpOutcome::Infeasible { farkas, eq_farkas } => {
            if farkas.len() != rows || eq_farkas.len() != eq_rows {
                return false;
            }
            if farkas.iter().any(Signed::is_negative) {
                return false;
            }
            let mut combined = vec![Rational::zero(); n];
            combine(&lp.constraints, farkas, &mut combined);
            combine(&lp.equalities, eq_farkas, &mut combined);
            combined.iter().all(Zero::is_zero)
                && (dot(farkas, &lp.rhs) + dot(eq_farkas, &lp.eq_rhs)).is_positive()
        }
    }
}
