//! Exact minimality decisions through an LP-duality encoding of set
//! containment.
//!
//! For `x̄ ∈ dom F`, `F_C(x) ⊇ F_C(x̄)` holds iff for every row `i` the value
//! of `min {B_i y : B y >= b - A x̄}` is at least `b_i - A_i x`. By duality
//! this is the existence of `λ_i >= 0` with `λ_iᵀB = B_i` and
//! `λ_iᵀ(b - A x̄) >= b_i - A_i x`, which is linear in `(x, λ)`. A strictly
//! larger value exists iff, jointly with those constraints, some
//! `y ∈ F_C(x)` violates a row `j` of `F_C(x̄)`.

use num_traits::Zero;

use super::Problem;
use crate::arith::{self, dot, RatMatrix, RatVector, Rational};
use crate::error::{Error, Result};
use crate::lp::{LinearProgram, LpOutcome};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Minimality {
    Minimal,
    /// `F_C(x) ⊇ F_C(x̄)` and `y ∈ F_C(x) \ F_C(x̄)`.
    Dominated {
        x: RatVector,
        y: RatVector,
    },
}

impl Minimality {
    pub fn is_minimal(&self) -> bool {
        matches!(self, Minimality::Minimal)
    }
}

impl Problem {
    pub fn minimality(&self, xbar: &[Rational]) -> Result<Minimality> {
        self.check_x(xbar)?;
        if !self.in_domain(xbar)? {
            return Err(Error::NotInDomain);
        }
        let (n, q, m) = (self.n(), self.q(), self.m());
        let residual = arith::sub(self.rhs(), &arith::mat_vec(self.a(), xbar)?);
        let b = self.b();

        // Rows with B_i = 0 need no multiplier: containment reduces to A_i x >= b_i.
        let dual_rows: Vec<usize> = (0..m).filter(|&i| !arith::is_zero_vec(b.row(i))).collect();
        let lambda_at = |slot: usize| n + slot * m;
        let y_start = n + dual_rows.len() * m;
        let nvars = y_start + q;

        let mut rows: Vec<RatVector> = Vec::new();
        let mut rhs: Vec<Rational> = Vec::new();
        let mut eq_rows: Vec<RatVector> = Vec::new();
        let mut eq_rhs: Vec<Rational> = Vec::new();
        for i in 0..m {
            let mut row = arith::zeros(nvars);
            row[..n].clone_from_slice(self.a().row(i));
            if let Some(slot) = dual_rows.iter().position(|&r| r == i) {
                let base = lambda_at(slot);
                row[base..base + m].clone_from_slice(&residual);
                for k in 0..m {
                    rows.push(arith::unit(nvars, base + k));
                    rhs.push(Rational::zero());
                }
                for col in 0..q {
                    let mut e = arith::zeros(nvars);
                    for k in 0..m {
                        e[base + k] = b.get(k, col).clone();
                    }
                    eq_rows.push(e);
                    eq_rhs.push(b.get(i, col).clone());
                }
            }
            rows.push(row);
            rhs.push(self.rhs()[i].clone());
        }
        for i in 0..m {
            let mut row = arith::zeros(nvars);
            row[..n].clone_from_slice(self.a().row(i));
            row[y_start..].clone_from_slice(b.row(i));
            rows.push(row);
            rhs.push(self.rhs()[i].clone());
        }
        let base_lp =
            LinearProgram::new(arith::zeros(nvars), RatMatrix::from_rows(nvars, rows)?, rhs)?
                .with_equalities(RatMatrix::from_rows(nvars, eq_rows)?, eq_rhs)?;

        for &j in &dual_rows {
            let mut objective = arith::zeros(nvars);
            objective[y_start..].clone_from_slice(b.row(j));
            let lp = LinearProgram::new(
                objective,
                base_lp.constraints().clone(),
                base_lp.rhs().to_vec(),
            )?
            .with_equalities(base_lp.equalities().clone(), base_lp.eq_rhs().to_vec())?;
            let target = &residual[j];
            let escape = match lp.solve() {
                LpOutcome::Optimal { point, value, .. } if value < *target => Some(point),
                LpOutcome::Optimal { .. } => None,
                LpOutcome::Unbounded { point, ray } => {
                    let start = dot(b.row(j), &point[y_start..]);
                    let slope = dot(b.row(j), &ray[y_start..]);
                    let t = if start < *target {
                        Rational::zero()
                    } else {
                        (start - target) / -slope + arith::int(1)
                    };
                    Some(arith::add(&point, &arith::scale(&ray, &t)))
                }
                LpOutcome::Infeasible { .. } => {
                    unreachable!("x = x̄ with unit multipliers is always feasible")
                }
            };
            if let Some(z) = escape {
                let x = z[..n].to_vec();
                let y = z[y_start..].to_vec();
                debug_assert!(self.evaluate(&x)?.contains_point(&y));
                debug_assert!(!self.evaluate(xbar)?.contains_point(&y));
                return Ok(Minimality::Dominated { x, y });
            }
        }
        Ok(Minimality::Minimal)
    }

    /// `∄x: F_C(x) ⊋ F_C(x̄)`; `x̄` must lie in `dom F`.
    pub fn is_minimizing_point(&self, xbar: &[Rational]) -> Result<bool> {
        Ok(self.minimality(xbar)?.is_minimal())
    }

    /// Minimality of a nonzero `x̂ ∈ dom 0⁺F` for the homogeneous problem.
    pub fn direction_minimality(&self, xhat: &[Rational]) -> Result<Minimality> {
        self.check_x(xhat)?;
        if xhat.iter().all(Zero::is_zero) {
            return Err(Error::ZeroDirection);
        }
        self.homogeneous().minimality(xhat)
    }

    pub fn is_minimizing_direction(&self, xhat: &[Rational]) -> Result<bool> {
        Ok(self.direction_minimality(xhat)?.is_minimal())
    }
}

/// Checks a domination claim directly: `F_C(x) ⊇ F_C(x̄)` via the generators
/// of `F_C(x̄)`, and `y ∈ F_C(x) \ F_C(x̄)`.
pub fn confirms_domination(
    problem: &Problem,
    xbar: &[Rational],
    x: &[Rational],
    y: &[Rational],
) -> Result<bool> {
    let at_x = problem.evaluate(x)?;
    let at_xbar = problem.evaluate(xbar)?;
    Ok(at_x.contains(&at_xbar.to_vrep())? && at_x.contains_point(y) && !at_xbar.contains_point(y))
}
