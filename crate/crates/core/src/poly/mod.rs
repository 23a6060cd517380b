//! Convex polyhedra in inequality form ([`HRep`]) and generator form
//! ([`VRep`]), polyhedral cones, and the geometric operations built on them.

mod dd;
mod project;
mod relation;

pub use relation::{c_minimal_in_family, set_dominates};

use num_traits::{One, Signed, Zero};

use crate::arith::{self, dot, nullspace, RatMatrix, RatVector, Rational};
use crate::error::{Error, Result};
use crate::lp::LinearProgram;

/// `{z ∈ R^d : M z >= v}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HRep {
    matrix: RatMatrix,
    rhs: RatVector,
}

impl HRep {
    pub fn new(matrix: RatMatrix, rhs: RatVector) -> Result<Self> {
        if matrix.nrows() != rhs.len() {
            return Err(Error::dims(
                "inequality right-hand side",
                matrix.nrows(),
                rhs.len(),
            ));
        }
        Ok(HRep { matrix, rhs })
    }

    pub fn from_i64(dim: usize, rows: &[&[i64]], rhs: &[i64]) -> Self {
        HRep::new(RatMatrix::from_i64(dim, rows), arith::int_vec(rhs)).expect("inequality literal")
    }

    /// All of `R^dim`.
    pub fn universe(dim: usize) -> Self {
        HRep {
            matrix: RatMatrix::zeros(0, dim),
            rhs: Vec::new(),
        }
    }

    /// The empty set, written as the single row `0 >= 1`.
    pub fn empty(dim: usize) -> Self {
        HRep {
            matrix: RatMatrix::zeros(1, dim),
            rhs: vec![Rational::one()],
        }
    }

    /// `{z : G z >= 0}`.
    pub fn homogeneous(matrix: RatMatrix) -> Self {
        let rhs = arith::zeros(matrix.nrows());
        HRep { matrix, rhs }
    }

    pub fn dim(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn num_rows(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    pub fn rows(&self) -> impl Iterator<Item = (&[Rational], &Rational)> + '_ {
        self.matrix.rows().zip(&self.rhs)
    }

    pub fn contains_point(&self, z: &[Rational]) -> bool {
        z.len() == self.dim() && self.rows().all(|(row, v)| dot(row, z) >= *v)
    }

    /// Whether `r` lies in `{z : M z >= 0}`.
    pub fn contains_direction(&self, r: &[Rational]) -> bool {
        r.len() == self.dim() && self.matrix.rows().all(|row| !dot(row, r).is_negative())
    }

    pub fn is_empty(&self) -> bool {
        let lp = LinearProgram::new(
            arith::zeros(self.dim()),
            self.matrix.clone(),
            self.rhs.clone(),
        )
        .expect("consistent dimensions");
        !lp.solve().is_feasible()
    }

    /// `{z : M z >= 0}`; the zero cone (flagged) when the polyhedron is empty.
    pub fn recession_cone(&self) -> RecessionCone {
        if self.is_empty() {
            return RecessionCone {
                cone: Cone::zero(self.dim()).hrep().clone(),
                of_empty: true,
            };
        }
        RecessionCone {
            cone: HRep::homogeneous(self.matrix.clone()),
            of_empty: false,
        }
    }

    /// Basis of `L(P) = 0⁺P ∩ (−0⁺P) = {z : M z = 0}`.
    pub fn lineality_space(&self) -> Result<Vec<RatVector>> {
        if self.is_empty() {
            return Err(Error::EmptyPolyhedron("lineality space"));
        }
        Ok(nullspace(&self.matrix.to_rows(), self.dim()))
    }

    /// Generator form via double description. An infeasible system yields a
    /// [`VRep`] without points.
    pub fn to_vrep(&self) -> VRep {
        let d = self.dim();
        let mut constraints = vec![arith::unit(d + 1, 0)];
        for (row, v) in self.rows() {
            let mut a = Vec::with_capacity(d + 1);
            a.push(-v);
            a.extend_from_slice(row);
            constraints.push(a);
        }
        let gens = dd::cone_generators(d + 1, &constraints);
        let mut points = Vec::new();
        let mut rays = Vec::new();
        for g in gens.rays {
            if g[0].is_zero() {
                rays.push(g[1..].to_vec());
            } else {
                let t = g[0].clone();
                points.push(g[1..].iter().map(|x| x / &t).collect());
            }
        }
        if points.is_empty() {
            return VRep::empty(d);
        }
        let lines = gens.lines.into_iter().map(|l| l[1..].to_vec()).collect();
        VRep::from_parts_unchecked(d, points, rays, lines).sorted()
    }

    /// Exact coordinate projection onto `keep` (in that order) by
    /// Fourier–Motzkin elimination with LP-based redundancy removal.
    pub fn project(&self, keep: &[usize]) -> Result<HRep> {
        project::project(self, keep)
    }

    /// Drops every row implied by the others.
    pub fn without_redundancy(&self) -> HRep {
        project::remove_redundancy(self)
    }

    /// Whether every generator of `other` satisfies this system.
    pub fn contains(&self, other: &VRep) -> Result<bool> {
        if self.dim() != other.dim() {
            return Err(Error::dims("containment", self.dim(), other.dim()));
        }
        Ok(other.points.iter().all(|p| self.contains_point(p))
            && other.rays.iter().all(|r| self.contains_direction(r))
            && other
                .lines
                .iter()
                .all(|l| self.matrix.rows().all(|row| dot(row, l).is_zero())))
    }

    /// Set equality by mutual containment, converting each side to the
    /// other's representation.
    pub fn equals(&self, other: &VRep) -> Result<bool> {
        if !self.contains(other)? {
            return Ok(false);
        }
        other.to_hrep().contains(&self.to_vrep())
    }

    pub fn intersect(&self, other: &HRep) -> Result<HRep> {
        if self.dim() != other.dim() {
            return Err(Error::dims("intersection", self.dim(), other.dim()));
        }
        let mut matrix = self.matrix.clone();
        for row in other.matrix.rows() {
            matrix.push_row(row)?;
        }
        let mut rhs = self.rhs.clone();
        rhs.extend_from_slice(&other.rhs);
        HRep::new(matrix, rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecessionCone {
    pub cone: HRep,
    /// Set when the source polyhedron was empty and `cone` is the zero cone.
    pub of_empty: bool,
}

/// `conv(points) + cone(rays) + span(lines)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VRep {
    dim: usize,
    points: Vec<RatVector>,
    rays: Vec<RatVector>,
    lines: Vec<RatVector>,
}

impl VRep {
    pub fn new(
        dim: usize,
        points: Vec<RatVector>,
        rays: Vec<RatVector>,
        lines: Vec<RatVector>,
    ) -> Result<Self> {
        for v in points.iter().chain(&rays).chain(&lines) {
            if v.len() != dim {
                return Err(Error::dims("generator", dim, v.len()));
            }
        }
        if rays.iter().chain(&lines).any(|v| arith::is_zero_vec(v)) {
            return Err(Error::format("rays", "rays and lines must be nonzero"));
        }
        if points.is_empty() && !(rays.is_empty() && lines.is_empty()) {
            return Err(Error::format(
                "points",
                "a polyhedron with rays or lines needs at least one point",
            ));
        }
        Ok(Self::from_parts_unchecked(dim, points, rays, lines))
    }

    fn from_parts_unchecked(
        dim: usize,
        points: Vec<RatVector>,
        rays: Vec<RatVector>,
        lines: Vec<RatVector>,
    ) -> Self {
        VRep {
            dim,
            points,
            rays,
            lines,
        }
    }

    pub fn empty(dim: usize) -> Self {
        Self::from_parts_unchecked(dim, Vec::new(), Vec::new(), Vec::new())
    }

    pub fn point(p: RatVector) -> Self {
        Self::from_parts_unchecked(p.len(), vec![p], Vec::new(), Vec::new())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[RatVector] {
        &self.points
    }

    pub fn rays(&self) -> &[RatVector] {
        &self.rays
    }

    pub fn lines(&self) -> &[RatVector] {
        &self.lines
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Rays plus both orientations of every line: a plain conic generating
    /// set of the recession cone.
    pub fn direction_generators(&self) -> Vec<RatVector> {
        let mut out = self.rays.clone();
        for l in &self.lines {
            out.push(l.clone());
            out.push(arith::neg(l));
        }
        out
    }

    /// Inequality form via the dual double description: the facets of the
    /// homogenized cone are the extreme rays of its dual cone.
    pub fn to_hrep(&self) -> HRep {
        let d = self.dim;
        if self.is_empty() {
            return HRep::empty(d);
        }
        let lift = |head: Rational, v: &[Rational]| -> RatVector {
            let mut w = Vec::with_capacity(d + 1);
            w.push(head);
            w.extend_from_slice(v);
            w
        };
        let mut constraints: Vec<RatVector> = Vec::new();
        for p in &self.points {
            constraints.push(lift(Rational::one(), p));
        }
        for r in &self.rays {
            constraints.push(lift(Rational::zero(), r));
        }
        for l in &self.lines {
            constraints.push(lift(Rational::zero(), l));
            constraints.push(lift(Rational::zero(), &arith::neg(l)));
        }
        let dual = dd::cone_generators(d + 1, &constraints);
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        let mut push = |a: &RatVector| {
            if arith::is_zero_vec(&a[1..]) {
                return;
            }
            rows.push(a[1..].to_vec());
            rhs.push(-&a[0]);
        };
        let mut facets = dual.rays.clone();
        facets.sort();
        for a in &facets {
            push(a);
        }
        for l in &dual.lines {
            push(l);
            push(&arith::neg(l));
        }
        HRep::new(RatMatrix::from_rows(d, rows).expect("facet rows"), rhs).expect("facet rhs")
    }

    /// Minimal generating set of the same polyhedron.
    pub fn reduced(&self) -> VRep {
        self.to_hrep().to_vrep()
    }

    fn sorted(mut self) -> Self {
        self.points.sort();
        self.rays.sort();
        self.lines.sort();
        self
    }
}

/// A polyhedral convex cone, kept both as generators and as `{y : G y >= 0}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cone {
    dim: usize,
    generators: Vec<RatVector>,
    hrep: HRep,
}

impl Cone {
    /// `cone(generators)`; an empty list gives `{0}`.
    pub fn from_generators(dim: usize, generators: Vec<RatVector>) -> Result<Self> {
        for g in &generators {
            if g.len() != dim {
                return Err(Error::dims("cone generator", dim, g.len()));
            }
        }
        let generators: Vec<RatVector> = generators
            .into_iter()
            .filter(|g| !arith::is_zero_vec(g))
            .map(|g| arith::primitive(&g))
            .collect();
        let vrep = VRep::from_parts_unchecked(
            dim,
            vec![arith::zeros(dim)],
            generators.clone(),
            Vec::new(),
        );
        let hrep = vrep.to_hrep();
        Ok(Cone {
            dim,
            generators,
            hrep,
        })
    }

    /// `{y : G y >= 0}`.
    pub fn from_inequalities(matrix: RatMatrix) -> Self {
        let hrep = HRep::homogeneous(matrix);
        let generators = hrep.to_vrep().direction_generators();
        Cone {
            dim: hrep.dim(),
            generators,
            hrep,
        }
    }

    pub fn nonnegative_orthant(dim: usize) -> Self {
        Self::from_generators(dim, (0..dim).map(|i| arith::unit(dim, i)).collect())
            .expect("orthant")
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_generators(dim, Vec::new()).expect("zero cone")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[RatVector] {
        &self.generators
    }

    pub fn hrep(&self) -> &HRep {
        &self.hrep
    }

    pub fn contains(&self, y: &[Rational]) -> bool {
        self.hrep.contains_direction(y)
    }

    /// `{0} + cone(generators)` as a generator-form polyhedron.
    pub fn to_vrep(&self) -> VRep {
        VRep::from_parts_unchecked(
            self.dim,
            vec![arith::zeros(self.dim)],
            self.generators.clone(),
            Vec::new(),
        )
    }
}

/// `conv(⋃ points of parts) + cone(⋃ directions of parts ∪ extra)`.
///
/// Cone generators from `extra_cone_gens` that are zero are ignored, so an
/// empty list contributes `{0}`.
pub fn minkowski_and_hulls(parts: &[VRep], extra_cone_gens: &[RatVector]) -> Result<VRep> {
    let dim = parts
        .first()
        .map(VRep::dim)
        .or_else(|| extra_cone_gens.first().map(Vec::len))
        .ok_or(Error::EmptySum)?;
    let mut points = Vec::new();
    let mut rays = Vec::new();
    let mut lines = Vec::new();
    for part in parts {
        if part.dim() != dim {
            return Err(Error::dims("hull part", dim, part.dim()));
        }
        points.extend(part.points.iter().cloned());
        rays.extend(part.rays.iter().cloned());
        lines.extend(part.lines.iter().cloned());
    }
    if points.is_empty() {
        return Err(Error::EmptySum);
    }
    for g in extra_cone_gens {
        if g.len() != dim {
            return Err(Error::dims("cone generator", dim, g.len()));
        }
        if !arith::is_zero_vec(g) {
            rays.push(g.clone());
        }
    }
    Ok(VRep::from_parts_unchecked(dim, points, rays, lines))
}
