//! Exact solver and verifier for polyhedral convex set optimization.
//!
//! A problem minimizes `F_C(x) = F(x) + C` with respect to `⊇`, where the
//! graph of `F_C` is `{(x, y) : A x + B y >= b}` and `C` is a polyhedral
//! ordering cone. All arithmetic is over exact rationals.
//!
//! | module   | contents                                                         |
//! |----------|------------------------------------------------------------------|
//! | `arith`  | rationals, vectors, dense matrices, rank and kernels             |
//! | `lp`     | two-phase simplex with optimality, ray and Farkas certificates   |
//! | `poly`   | H/V conversion, projection, recession cones, set relations       |
//! | `setopt` | upper images, minimality, existence conditions, solve and verify |
//! | `vlp`    | vector linear programs and the lineality test for them           |
//! | `io`     | JSON problem/solution/family files and text rendering            |
//! | `cli`    | the `polyset` command                                            |
//!
//! ```
//! use polyset::arith::{int_vec, RatMatrix};
//! use polyset::poly::Cone;
//! use polyset::setopt::{Problem, SolveResult};
//!
//! // F(x) = {(-x, x)} + R²₊ on x >= 0.
//! let p = Problem::new(
//!     RatMatrix::from_i64(1, &[&[1], &[-1], &[1]]),
//!     RatMatrix::from_i64(2, &[&[1, 0], &[0, 1], &[0, 0]]),
//!     int_vec(&[0, 0, 0]),
//!     Cone::nonnegative_orthant(2),
//! )
//! .unwrap();
//! let SolveResult::Solution { pair, .. } = p.solve().unwrap() else {
//!     panic!("solvable");
//! };
//! assert!(p.verify(&pair).unwrap().passed());
//! ```
//!
//! Runnable walkthroughs live in `examples/` (`cargo run --example <name>`).

pub mod arith;
pub mod cli;
pub mod error;
pub mod io;
pub mod lp;
pub mod poly;
pub mod setopt;
pub mod vlp;
