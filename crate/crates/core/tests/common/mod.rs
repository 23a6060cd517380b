//! Seeded instance generators and brute-force oracles shared by the
//! integration tests. The oracles use their own elimination code and do not
//! call the simplex or the double description routines.

#![allow(dead_code)]

use std::path::PathBuf;

use num_traits::{One, Signed, Zero};
use polyset::arith::{self, dot, RatMatrix, RatVector, Rational};
use polyset::lp::{LinearProgram, LpOutcome};
use polyset::poly::{Cone, HRep, VRep};
use polyset::setopt::Problem;
use polyset::vlp::VlpProblem;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples")
        .join(name)
}

pub fn int_row(rng: &mut ChaCha8Rng, len: usize, bound: i64) -> RatVector {
    (0..len)
        .map(|_| arith::int(rng.gen_range(-bound..=bound)))
        .collect()
}

pub fn int_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> RatMatrix {
    RatMatrix::from_rows(cols, (0..rows).map(|_| int_row(rng, cols, bound)).collect()).unwrap()
}

pub fn random_hrep(rng: &mut ChaCha8Rng, dim: usize, rows: usize, bound: i64) -> HRep {
    HRep::new(int_matrix(rng, rows, dim, bound), int_row(rng, rows, bound)).unwrap()
}

/// A random feasible problem with integer data in `[-3, 3]`, `n, q <= 3`,
/// `m <= 6`, and `C` spanned by a random subset of the generators of
/// `{c : B c >= 0}`, which makes the system cone invariant.
pub fn random_problem(rng: &mut ChaCha8Rng) -> Problem {
    loop {
        let n = rng.gen_range(1..=3);
        let q = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=6);
        let a = int_matrix(rng, m, n, 3);
        let b = int_matrix(rng, m, q, 3);
        let rhs = int_row(rng, m, 3);
        let cone = random_subcone(rng, &b);
        let p = Problem::new(a, b, rhs, cone).expect("cone invariant by construction");
        if p.is_feasible() {
            return p;
        }
    }
}

/// Cone spanned by a random subset of the generators of `{c : B c >= 0}`.
pub fn random_subcone(rng: &mut ChaCha8Rng, b: &RatMatrix) -> Cone {
    let full = HRep::homogeneous(b.clone()).to_vrep();
    let mut gens = full.direction_generators();
    gens.shuffle(rng);
    let keep = rng.gen_range(0..=gens.len());
    gens.truncate(keep);
    Cone::from_generators(b.ncols(), gens).unwrap()
}

/// A random feasible problem whose domain lies in the box `[-2, 2]^n`
/// and whose cone is all of `{c : B c >= 0}`; usually bounded.
pub fn random_boxed_problem(rng: &mut ChaCha8Rng) -> Problem {
    loop {
        let n = rng.gen_range(1..=2);
        let q = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=4);
        let mut a = int_matrix(rng, m, n, 3);
        let mut b = int_matrix(rng, m, q, 3);
        let mut rhs = int_row(rng, m, 3);
        for i in 0..n {
            for s in [1, -1] {
                a.push_row(&arith::scale(&arith::unit(n, i), &arith::int(s)))
                    .unwrap();
                b.push_row(&arith::zeros(q)).unwrap();
                rhs.push(arith::int(-2));
            }
        }
        let cone = Cone::from_generators(
            q,
            HRep::homogeneous(b.clone())
                .to_vrep()
                .direction_generators(),
        )
        .unwrap();
        let p = Problem::new(a, b, rhs, cone).unwrap();
        if p.is_feasible() {
            return p;
        }
    }
}

/// A random small VLP; the cone is spanned by one to three random vectors.
pub fn random_vlp(rng: &mut ChaCha8Rng) -> VlpProblem {
    let n = rng.gen_range(1..=3);
    let q = rng.gen_range(1..=3);
    let m = rng.gen_range(0..=4);
    let mut gens = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let g = int_row(rng, q, 2);
        if !arith::is_zero_vec(&g) {
            gens.push(g);
        }
    }
    VlpProblem::new(
        int_matrix(rng, q, n, 3),
        int_matrix(rng, m, n, 3),
        int_row(rng, m, 3),
        Cone::from_generators(q, gens).unwrap(),
    )
    .unwrap()
}

// ------------------------------------------------------------ elimination

/// Reduced row echelon form; returns the pivot columns.
fn rref(rows: &mut [RatVector], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (v, pv) in rows[i].iter_mut().zip(&pivot_row) {
                    *v = &*v - &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Unique solution of a square system, if the matrix is nonsingular.
pub fn solve_square(rows: &[RatVector], rhs: &[Rational]) -> Option<RatVector> {
    let n = rows.len();
    let mut aug: Vec<RatVector> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, n);
    (pivots.len() == n).then(|| aug.iter().map(|r| r[n].clone()).collect())
}

/// Kernel basis of `rows` (each of length `ncols`).
pub fn kernel(rows: &[RatVector], ncols: usize) -> Vec<RatVector> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = arith::zeros(ncols);
            v[free] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&m[r][free];
            }
            v
        })
        .collect()
}

pub fn rank_of(rows: &[RatVector], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

// ------------------------------------------------------------ LP oracle

#[derive(Debug, PartialEq)]
pub enum BruteLp {
    Infeasible,
    Unbounded,
    Optimal(Rational),
}

/// `min c·z  s.t.  G z >= h` for `G` of full column rank, by enumerating
/// basic solutions and extreme rays of `{G r >= 0}`.
pub fn brute_force_lp(c: &[Rational], g: &RatMatrix, h: &[Rational]) -> BruteLp {
    let n = c.len();
    let rows: Vec<RatVector> = g.rows().map(<[Rational]>::to_vec).collect();
    assert_eq!(rank_of(&rows, n), n, "oracle needs full column rank");
    let feasible = |z: &[Rational]| rows.iter().zip(h).all(|(r, hi)| &dot(r, z) >= hi);
    let mut best: Option<Rational> = None;
    for s in subsets(rows.len(), n) {
        let sub: Vec<RatVector> = s.iter().map(|&i| rows[i].clone()).collect();
        let rhs: Vec<Rational> = s.iter().map(|&i| h[i].clone()).collect();
        if let Some(z) = solve_square(&sub, &rhs) {
            if feasible(&z) {
                let v = dot(c, &z);
                if best.as_ref().is_none_or(|b| &v < b) {
                    best = Some(v);
                }
            }
        }
    }
    let Some(best) = best else {
        return BruteLp::Infeasible;
    };
    for s in subsets(rows.len(), n - 1) {
        let sub: Vec<RatVector> = s.iter().map(|&i| rows[i].clone()).collect();
        let k = kernel(&sub, n);
        if k.len() != 1 {
            continue;
        }
        for d in [k[0].clone(), arith::neg(&k[0])] {
            let is_ray = rows.iter().all(|r| !dot(r, &d).is_negative());
            if is_ray && dot(c, &d).is_negative() {
                return BruteLp::Unbounded;
            }
        }
    }
    BruteLp::Optimal(best)
}

pub fn classify(outcome: &LpOutcome) -> BruteLp {
    match outcome {
        LpOutcome::Optimal { value, .. } => BruteLp::Optimal(value.clone()),
        LpOutcome::Unbounded { .. } => BruteLp::Unbounded,
        LpOutcome::Infeasible { .. } => BruteLp::Infeasible,
    }
}

/// A random LP with at most five variables and full column rank.
pub fn random_lp(rng: &mut ChaCha8Rng) -> LinearProgram {
    loop {
        let n = rng.gen_range(1..=5);
        let m = rng.gen_range(n..=n + 4);
        let g = int_matrix(rng, m, n, 3);
        let rows: Vec<RatVector> = g.rows().map(<[Rational]>::to_vec).collect();
        if rank_of(&rows, n) < n {
            continue;
        }
        return LinearProgram::new(int_row(rng, n, 3), g, int_row(rng, m, 4)).unwrap();
    }
}

// ------------------------------------------------------------ projection route

/// Projection by generators: drop coordinates of every generator.
pub fn project_by_generators(p: &HRep, keep: &[usize]) -> VRep {
    let v = p.to_vrep();
    let pick = |x: &RatVector| -> RatVector { keep.iter().map(|&i| x[i].clone()).collect() };
    let drop_zero = |xs: &[RatVector]| -> Vec<RatVector> {
        xs.iter()
            .map(pick)
            .filter(|x| !arith::is_zero_vec(x))
            .collect()
    };
    if v.is_empty() {
        return VRep::empty(keep.len());
    }
    VRep::new(
        keep.len(),
        v.points().iter().map(pick).collect(),
        drop_zero(v.rays()),
        drop_zero(v.lines()),
    )
    .unwrap()
}

/// Whether two H-representations describe the same set, checked through
/// generators in both directions.
pub fn same_set(a: &HRep, b: &HRep) -> bool {
    a.equals(&b.to_vrep()).unwrap() && b.equals(&a.to_vrep()).unwrap()
}

pub fn vec_is_nonneg(v: &[Rational]) -> bool {
    v.iter().all(|x| !x.is_negative())
}
