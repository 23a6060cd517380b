//! Polyhedral convex set optimization: minimize `F_C(x) = F(x) + C` with
//! respect to `⊇`, where the graph of `F_C` is `{(x, y) : A x + B y >= b}`.

mod existence;
mod minimality;
mod verify;

pub use existence::{NoSolutionWitness, Prop4, SolutionPair, SolveResult};
pub use minimality::{confirms_domination, Minimality};
pub use verify::VerificationReport;

use std::sync::OnceLock;

use num_traits::{Signed, Zero};

use crate::arith::{self, dot, mat_vec, RatMatrix, RatVector, Rational};
use crate::error::{Error, Result};
use crate::lp::LinearProgram;
use crate::poly::{Cone, HRep, VRep};

/// Lifted inequality form `Mx x + My y + Mz z >= c` of a graph, with
/// auxiliary variables `z` to be projected out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PRep {
    pub mx: RatMatrix,
    pub my: RatMatrix,
    pub mz: RatMatrix,
    pub c: RatVector,
}

impl PRep {
    /// Encodes `graph + ({0} × C)` for a graph given by generators in
    /// `R^n × R^q`: the multipliers of points, rays, lines and cone
    /// generators become the auxiliary variables.
    pub fn from_graph_generators(n: usize, graph: &VRep, cone: &Cone) -> Result<Self> {
        let q = cone.dim();
        if graph.dim() != n + q {
            return Err(Error::dims("graph generators", n + q, graph.dim()));
        }
        // Columns of the generator matrix, each a vector in R^{n+q}.
        let mut columns: Vec<RatVector> = Vec::new();
        columns.extend(graph.points().iter().cloned());
        let npoints = columns.len();
        columns.extend(graph.rays().iter().cloned());
        for l in graph.lines() {
            columns.push(l.clone());
            columns.push(arith::neg(l));
        }
        for g in cone.generators() {
            let mut lifted = arith::zeros(n);
            lifted.extend(g.iter().cloned());
            columns.push(lifted);
        }
        let k = columns.len();
        let mut rows: Vec<RatVector> = Vec::new();
        let mut c = Vec::new();
        // (x, y) - Σ z_j col_j = 0, as two inequalities per coordinate.
        for coord in 0..n + q {
            let mut row = arith::zeros(n + q + k);
            row[coord] = arith::int(1);
            for (j, col) in columns.iter().enumerate() {
                row[n + q + j] = -&col[coord];
            }
            rows.push(arith::neg(&row));
            rows.push(row);
            c.push(Rational::zero());
            c.push(Rational::zero());
        }
        // Convex weights on the points.
        if npoints > 0 {
            let mut row = arith::zeros(n + q + k);
            for w in row.iter_mut().skip(n + q).take(npoints) {
                *w = arith::int(1);
            }
            rows.push(arith::neg(&row));
            rows.push(row);
            c.push(arith::int(-1));
            c.push(arith::int(1));
        } else {
            rows.push(arith::zeros(n + q + k));
            c.push(arith::int(1));
        }
        for j in 0..k {
            rows.push(arith::unit(n + q + k, n + q + j));
            c.push(Rational::zero());
        }
        let full = RatMatrix::from_rows(n + q + k, rows)?;
        Ok(PRep {
            mx: full.select_columns(&(0..n).collect::<Vec<_>>()),
            my: full.select_columns(&(n..n + q).collect::<Vec<_>>()),
            mz: full.select_columns(&(n + q..n + q + k).collect::<Vec<_>>()),
            c,
        })
    }

    fn lifted(&self) -> Result<HRep> {
        let m = self.mx.hstack(&self.my)?.hstack(&self.mz)?;
        HRep::new(m, self.c.clone())
    }
}

/// Upper image `P = C + ⋃ F(x)` in both representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperImage {
    pub hrep: HRep,
    pub vrep: VRep,
}

#[derive(Debug, Clone)]
pub struct Problem {
    a: RatMatrix,
    b: RatMatrix,
    rhs: RatVector,
    cone: Cone,
    upper: OnceLock<UpperImage>,
}

impl PartialEq for Problem {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && self.rhs == other.rhs && self.cone == other.cone
    }
}

impl Problem {
    /// `y ∈ F_C(x) ⟺ A x + B y >= b`.
    ///
    /// The rows must describe a graph that is invariant under `C`; a feasible
    /// system with `B c ≱ 0` for some generator `c` is rejected. An
    /// infeasible system is accepted as the empty mapping.
    pub fn new(a: RatMatrix, b: RatMatrix, rhs: RatVector, cone: Cone) -> Result<Self> {
        if a.nrows() != b.nrows() {
            return Err(Error::dims("rows of B", a.nrows(), b.nrows()));
        }
        if a.nrows() != rhs.len() {
            return Err(Error::dims("rows of b", a.nrows(), rhs.len()));
        }
        if b.ncols() != cone.dim() {
            return Err(Error::dims("cone dimension", b.ncols(), cone.dim()));
        }
        let problem = Problem {
            a,
            b,
            rhs,
            cone,
            upper: OnceLock::new(),
        };
        let violated = problem.cone.generators().iter().find(|g| {
            mat_vec(&problem.b, g)
                .expect("cone dim")
                .iter()
                .any(Signed::is_negative)
        });
        if let Some(g) = violated {
            if problem.is_feasible() {
                return Err(Error::NotConeInvariant {
                    generator: arith::format_vector(g),
                });
            }
        }
        Ok(problem)
    }

    /// Builds the problem from a lifted representation of `gr F_C` by
    /// projecting out the auxiliary variables.
    pub fn from_prep(prep: &PRep, cone: Cone) -> Result<Self> {
        let n = prep.mx.ncols();
        let q = prep.my.ncols();
        let m = prep.c.len();
        for (name, rows) in [
            ("Mx", prep.mx.nrows()),
            ("My", prep.my.nrows()),
            ("Mz", prep.mz.nrows()),
        ] {
            if rows != m {
                return Err(Error::format(
                    name,
                    format!("expected {m} rows, found {rows}"),
                ));
            }
        }
        if prep.mz.ncols() == 0 {
            return Problem::new(prep.mx.clone(), prep.my.clone(), prep.c.clone(), cone);
        }
        let graph = prep.lifted()?.project(&(0..n + q).collect::<Vec<_>>())?;
        Problem::from_graph(n, &graph, cone)
    }

    /// Treats `A x + B y >= b` as the graph of `F` (not yet including `C`)
    /// and builds the problem for `F_C`, whose graph is `gr F + ({0} × C)`.
    pub fn absorbing_cone(a: RatMatrix, b: RatMatrix, rhs: RatVector, cone: Cone) -> Result<Self> {
        if cone.generators().is_empty() {
            return Problem::new(a, b, rhs, cone);
        }
        let m = rhs.len();
        let k = cone.generators().len();
        let generators = RatMatrix::from_rows(k, {
            let q = cone.dim();
            (0..q)
                .map(|i| cone.generators().iter().map(|g| g[i].clone()).collect())
                .collect()
        })?;
        let b_gen = b.mul(&generators)?.neg();
        let mut mx = a.clone();
        let mut my = b.clone();
        let mut mz = b_gen;
        let mut c = rhs;
        for j in 0..k {
            mx.push_row(&arith::zeros(a.ncols()))?;
            my.push_row(&arith::zeros(b.ncols()))?;
            mz.push_row(&arith::unit(k, j))?;
            c.push(Rational::zero());
        }
        debug_assert_eq!(mx.nrows(), m + k);
        Problem::from_prep(&PRep { mx, my, mz, c }, cone)
    }

    fn from_graph(n: usize, graph: &HRep, cone: Cone) -> Result<Self> {
        let q = graph.dim() - n;
        let m = graph.matrix();
        Problem::new(
            m.select_columns(&(0..n).collect::<Vec<_>>()),
            m.select_columns(&(n..n + q).collect::<Vec<_>>()),
            graph.rhs().to_vec(),
            cone,
        )
    }

    pub fn n(&self) -> usize {
        self.a.ncols()
    }

    pub fn q(&self) -> usize {
        self.b.ncols()
    }

    pub fn m(&self) -> usize {
        self.rhs.len()
    }

    pub fn a(&self) -> &RatMatrix {
        &self.a
    }

    pub fn b(&self) -> &RatMatrix {
        &self.b
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    /// `gr F_C` over coordinates `(x, y)`.
    pub fn graph(&self) -> HRep {
        HRep::new(
            self.a.hstack(&self.b).expect("row counts"),
            self.rhs.clone(),
        )
        .expect("row counts")
    }

    /// `F_C(x) = {y : B y >= b - A x}`.
    pub fn evaluate(&self, x: &[Rational]) -> Result<HRep> {
        let ax = mat_vec(&self.a, x)?;
        HRep::new(self.b.clone(), arith::sub(&self.rhs, &ax))
    }

    pub fn in_domain(&self, x: &[Rational]) -> Result<bool> {
        Ok(!self.evaluate(x)?.is_empty())
    }

    pub fn is_feasible(&self) -> bool {
        !self.graph().is_empty()
    }

    pub fn upper_image(&self) -> &UpperImage {
        self.upper.get_or_init(|| {
            let hrep = self
                .graph()
                .project(&(self.n()..self.n() + self.q()).collect::<Vec<_>>())
                .expect("valid coordinates");
            let vrep = hrep.to_vrep();
            UpperImage { hrep, vrep }
        })
    }

    /// Some `ℓ` with `{ℓ} + C ⊇ P`, if one exists.
    pub fn lower_bound(&self) -> Result<Option<RatVector>> {
        if !self.is_feasible() {
            return Err(Error::InfeasibleProblem("boundedness"));
        }
        let vrep = &self.upper_image().vrep;
        if !vrep
            .direction_generators()
            .iter()
            .all(|d| self.cone.contains(d))
        {
            return Ok(None);
        }
        // G (p - ℓ) >= 0 for every point p, i.e. -G ℓ >= -G p.
        let g = self.cone.hrep().matrix();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for p in vrep.points() {
            for row in g.rows() {
                rows.push(arith::neg(row));
                rhs.push(-dot(row, p));
            }
        }
        let lp = LinearProgram::new(
            arith::zeros(self.q()),
            RatMatrix::from_rows(self.q(), rows)?,
            rhs,
        )?;
        Ok(lp.solve().point().map(<[Rational]>::to_vec))
    }

    /// `∃ℓ: {ℓ} + C ⊇ P`.
    pub fn is_bounded(&self) -> Result<bool> {
        Ok(self.lower_bound()?.is_some())
    }

    /// The problem of the recession mapping: same `A`, `B`, `C` with `b = 0`.
    pub fn homogeneous(&self) -> Problem {
        Problem {
            a: self.a.clone(),
            b: self.b.clone(),
            rhs: arith::zeros(self.m()),
            cone: self.cone.clone(),
            upper: OnceLock::new(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        arith::is_zero_vec(&self.rhs)
    }

    /// `min Σ_i B_i yⁱ  s.t.  A x + B yⁱ >= b (i ∈ [m]),  A x + B ȳ >= b`
    /// over `(x, y¹, …, yᵐ)`.
    pub fn build_lp(&self, ybar: &[Rational]) -> Result<LinearProgram> {
        let (n, q, m) = (self.n(), self.q(), self.m());
        if ybar.len() != q {
            return Err(Error::dims("ȳ", q, ybar.len()));
        }
        let nvars = n + m * q;
        let mut rows = Vec::with_capacity(m * (m + 1));
        let mut rhs = Vec::with_capacity(m * (m + 1));
        for block in 0..m {
            for r in 0..m {
                let mut row = arith::zeros(nvars);
                row[..n].clone_from_slice(self.a.row(r));
                row[n + block * q..n + (block + 1) * q].clone_from_slice(self.b.row(r));
                rows.push(row);
                rhs.push(self.rhs[r].clone());
            }
        }
        for r in 0..m {
            let mut row = arith::zeros(nvars);
            row[..n].clone_from_slice(self.a.row(r));
            rows.push(row);
            rhs.push(&self.rhs[r] - dot(self.b.row(r), ybar));
        }
        let mut objective = arith::zeros(nvars);
        for i in 0..m {
            objective[n + i * q..n + (i + 1) * q].clone_from_slice(self.b.row(i));
        }
        LinearProgram::new(objective, RatMatrix::from_rows(nvars, rows)?, rhs)
    }

    pub(crate) fn check_x(&self, x: &[Rational]) -> Result<()> {
        if x.len() != self.n() {
            return Err(Error::dims("x", self.n(), x.len()));
        }
        Ok(())
    }
}
