//! Double description method for homogeneous cones `{w : a·w >= 0}`.
//!
//! Constraints are inserted in the given order starting from the whole space
//! (spanned by unit lines). Adjacency of a positive/negative ray pair is
//! decided algebraically: the constraints tight at both must have rank
//! `dim - lineality - 2`.

use num_traits::{Signed, Zero};

use crate::arith::{self, dot, RatVector, Rational};

#[derive(Debug, Clone, Default)]
pub(crate) struct ConeGenerators {
    pub rays: Vec<RatVector>,
    pub lines: Vec<RatVector>,
}

fn tight_set(processed: &[RatVector], r: &[Rational]) -> Vec<bool> {
    processed.iter().map(|a| dot(a, r).is_zero()).collect()
}

pub(crate) fn cone_generators(dim: usize, constraints: &[RatVector]) -> ConeGenerators {
    let mut lines: Vec<RatVector> = (0..dim).map(|i| arith::unit(dim, i)).collect();
    let mut rays: Vec<RatVector> = Vec::new();
    let mut processed: Vec<RatVector> = Vec::new();

    for a in constraints {
        debug_assert_eq!(a.len(), dim);
        if let Some(pivot) = lines.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lines.remove(pivot);
            let mut s0 = dot(a, &l0);
            if s0.is_negative() {
                l0 = arith::neg(&l0);
                s0 = -s0;
            }
            let project_out = |v: &mut RatVector| {
                let s = dot(a, v);
                if !s.is_zero() {
                    let f = s / &s0;
                    for (x, y) in v.iter_mut().zip(&l0) {
                        *x -= &f * y;
                    }
                    *v = arith::primitive(v);
                }
            };
            lines.iter_mut().for_each(project_out);
            rays.iter_mut().for_each(project_out);
            rays.push(arith::primitive(&l0));
            processed.push(a.clone());
            continue;
        }

        let values: Vec<Rational> = rays.iter().map(|r| dot(a, r)).collect();
        let target_rank = dim.saturating_sub(lines.len() + 2);
        let tight: Vec<Vec<bool>> = rays.iter().map(|r| tight_set(&processed, r)).collect();
        let mut next = Vec::new();
        for (r, v) in rays.iter().zip(&values) {
            if !v.is_negative() {
                next.push(r.clone());
            }
        }
        for (p, vp) in values.iter().enumerate().filter(|(_, v)| v.is_positive()) {
            for (n, vn) in values.iter().enumerate().filter(|(_, v)| v.is_negative()) {
                let common: Vec<RatVector> = processed
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| tight[p][*i] && tight[n][*i])
                    .map(|(_, row)| row.clone())
                    .collect();
                if common.len() < target_rank || arith::rank(&common) != target_rank {
                    continue;
                }
                let combined: RatVector = rays[n]
                    .iter()
                    .zip(&rays[p])
                    .map(|(xn, xp)| vp * xn - vn * xp)
                    .collect();
                next.push(arith::primitive(&combined));
            }
        }
        rays = next;
        processed.push(a.clone());
    }

    let lines = lines.iter().map(|l| arith::primitive_unsigned(l)).collect();
    ConeGenerators { rays, lines }
}
