//! Existence of solutions and their construction from the vertices and
//! extreme directions of the upper image.

use num_traits::{Signed, Zero};

use super::{Problem, UpperImage};
use crate::arith::{self, mat_vec, RatVector, Rational};
use crate::error::{Error, Result};
use crate::lp::LpOutcome;

/// The six equivalent existence conditions, each evaluated by its own route.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prop4 {
    /// Some vertex `ȳ` of `P` is covered by a minimizer (LP extraction,
    /// confirmed by the duality-based minimality test).
    pub minimizer_for_some_point: bool,
    /// Every vertex of `P` is covered by a minimizer.
    pub minimizer_for_every_point: bool,
    /// `LP(ȳ)` is optimal at some vertex of `P`.
    pub lp_optimal_for_some_point: bool,
    /// `LP(ȳ)` is optimal at every vertex of `P`.
    pub lp_optimal_for_every_point: bool,
    /// The homogeneous LP at `ȳ = 0` is optimal.
    pub homogeneous_lp_optimal: bool,
    /// `0` minimizes the homogeneous problem.
    pub zero_minimizes_homogeneous: bool,
}

impl Prop4 {
    pub fn as_array(&self) -> [bool; 6] {
        [
            self.minimizer_for_some_point,
            self.minimizer_for_every_point,
            self.lp_optimal_for_some_point,
            self.lp_optimal_for_every_point,
            self.homogeneous_lp_optimal,
            self.zero_minimizes_homogeneous,
        ]
    }

    pub fn all_true(&self) -> bool {
        self.as_array().iter().all(|&b| b)
    }

    pub fn all_false(&self) -> bool {
        self.as_array().iter().all(|&b| !b)
    }

    pub fn agree(&self) -> bool {
        self.all_true() || self.all_false()
    }
}

/// Finite sets of minimizing points `S̄` and minimizing directions `Ŝ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionPair {
    pub points: Vec<RatVector>,
    pub directions: Vec<RatVector>,
}

/// Certificate that no solution exists: `(0⁺F_C)(x) ⊋ (0⁺F_C)(0)`, shown by
/// `A x >= 0` (containment) and `y ∈ (0⁺F_C)(x)` with `B y ≱ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoSolutionWitness {
    pub x: RatVector,
    pub y: RatVector,
}

impl NoSolutionWitness {
    pub fn check(&self, problem: &Problem) -> bool {
        if self.x.len() != problem.n() || self.y.len() != problem.q() {
            return false;
        }
        let ax = mat_vec(problem.a(), &self.x).expect("checked");
        let by = mat_vec(problem.b(), &self.y).expect("checked");
        ax.iter().all(|v| !v.is_negative())
            && ax.iter().zip(&by).all(|(a, b)| !(a + b).is_negative())
            && by.iter().any(Signed::is_negative)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult {
    Infeasible,
    NoSolution(NoSolutionWitness),
    Solution {
        pair: SolutionPair,
        upper_image: UpperImage,
    },
}

fn x_part(problem: &Problem, z: &[Rational]) -> RatVector {
    z[..problem.n()].to_vec()
}

fn dedup(items: Vec<RatVector>) -> Vec<RatVector> {
    let mut out: Vec<RatVector> = Vec::with_capacity(items.len());
    for v in items {
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

impl Problem {
    /// The homogeneous LP at `ȳ = 0`: optimal, or unbounded with a witness.
    fn homogeneous_lp(&self) -> Result<std::result::Result<(), NoSolutionWitness>> {
        let hom = self.homogeneous();
        let lp = hom.build_lp(&arith::zeros(self.q()))?;
        match lp.solve() {
            LpOutcome::Optimal { .. } => Ok(Ok(())),
            LpOutcome::Unbounded { ray, .. } => {
                let (n, q) = (self.n(), self.q());
                let x = ray[..n].to_vec();
                let y = (0..self.m())
                    .map(|i| ray[n + i * q..n + (i + 1) * q].to_vec())
                    .find(|yi| {
                        mat_vec(self.b(), yi)
                            .expect("q")
                            .iter()
                            .any(Signed::is_negative)
                    })
                    .expect("negative objective needs some B_i yⁱ < 0");
                let lead = x.iter().position(|v| !v.is_zero()).expect("x ≠ 0");
                let scaled = arith::primitive(&x);
                let factor = &scaled[lead] / &x[lead];
                let witness = NoSolutionWitness {
                    x: scaled,
                    y: arith::scale(&y, &factor),
                };
                debug_assert!(witness.check(self));
                Ok(Err(witness))
            }
            LpOutcome::Infeasible { .. } => unreachable!("0 is feasible for the homogeneous LP"),
        }
    }

    /// Evaluates the six equivalent existence conditions independently.
    pub fn prop4(&self) -> Result<Prop4> {
        if !self.is_feasible() {
            return Err(Error::InfeasibleProblem("existence conditions"));
        }
        let vertices = self.upper_image().vrep.points().to_vec();
        let mut lp_optimal = Vec::with_capacity(vertices.len());
        let mut covered = Vec::with_capacity(vertices.len());
        for ybar in &vertices {
            match self.build_lp(ybar)?.solve() {
                LpOutcome::Optimal { point, .. } => {
                    lp_optimal.push(true);
                    covered.push(self.is_minimizing_point(&x_part(self, &point))?);
                }
                _ => {
                    lp_optimal.push(false);
                    covered.push(false);
                }
            }
        }
        Ok(Prop4 {
            minimizer_for_some_point: covered[0],
            minimizer_for_every_point: covered.iter().all(|&c| c),
            lp_optimal_for_some_point: lp_optimal[0],
            lp_optimal_for_every_point: lp_optimal.iter().all(|&c| c),
            homogeneous_lp_optimal: self.homogeneous_lp()?.is_ok(),
            zero_minimizes_homogeneous: self
                .homogeneous()
                .is_minimizing_point(&arith::zeros(self.n()))?,
        })
    }

    /// Decides existence and, when a solution exists, builds one: a minimizer
    /// per vertex of `P` from `LP(ȳ)` and a minimizing direction per extreme
    /// direction of `P` from the homogeneous LP, dropping zero directions.
    pub fn solve(&self) -> Result<SolveResult> {
        if !self.is_feasible() {
            return Ok(SolveResult::Infeasible);
        }
        if let Err(witness) = self.homogeneous_lp()? {
            return Ok(SolveResult::NoSolution(witness));
        }
        let upper_image = self.upper_image().clone();
        let mut points = Vec::new();
        for ybar in upper_image.vrep.points() {
            let LpOutcome::Optimal { point, .. } = self.build_lp(ybar)?.solve() else {
                unreachable!("LP(ȳ) is optimal for ȳ ∈ P once the homogeneous LP is");
            };
            points.push(x_part(self, &point));
        }
        let hom = self.homogeneous();
        let mut directions = Vec::new();
        for yhat in upper_image.vrep.direction_generators() {
            let LpOutcome::Optimal { point, .. } = hom.build_lp(&yhat)?.solve() else {
                unreachable!("the homogeneous LP is optimal on 0⁺P");
            };
            let xhat = x_part(self, &point);
            if !arith::is_zero_vec(&xhat) {
                directions.push(arith::primitive(&xhat));
            }
        }
        Ok(SolveResult::Solution {
            pair: SolutionPair {
                points: dedup(points),
                directions: dedup(directions),
            },
            upper_image,
        })
    }
}
