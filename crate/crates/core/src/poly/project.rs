//! Fourier–Motzkin elimination with exact LP redundancy filtering.

use num_traits::{Signed, Zero};

use super::HRep;
use crate::arith::{self, RatMatrix, RatVector, Rational};
use crate::error::{Error, Result};
use crate::lp::{LinearProgram, LpOutcome};

/// An inequality `coeffs · z >= rhs` over the columns still in play.
type Row = (RatVector, Rational);

/// Scales `(coeffs, rhs)` positively to coprime integers.
fn normalize((coeffs, rhs): Row) -> Row {
    let mut joined = coeffs;
    joined.push(rhs);
    let mut joined = arith::primitive(&joined);
    let rhs = joined.pop().expect("rhs entry");
    (joined, rhs)
}

/// Normalizes, drops trivially true and duplicate rows. Returns `None` when
/// some row reads `0 >= positive`.
fn tidy(rows: Vec<Row>) -> Option<Vec<Row>> {
    let mut out: Vec<Row> = Vec::with_capacity(rows.len());
    for row in rows {
        if arith::is_zero_vec(&row.0) {
            if row.1.is_positive() {
                return None;
            }
            continue;
        }
        let row = normalize(row);
        if !out.contains(&row) {
            out.push(row);
        }
    }
    Some(out)
}

fn to_hrep(ncols: usize, rows: Vec<Row>) -> HRep {
    let (coeffs, rhs): (Vec<RatVector>, Vec<Rational>) = rows.into_iter().unzip();
    HRep::new(RatMatrix::from_rows(ncols, coeffs).expect("row width"), rhs).expect("row count")
}

/// Removes rows one at a time while the remaining rows still imply them.
fn filter_redundant(ncols: usize, mut rows: Vec<Row>) -> Vec<Row> {
    let mut i = 0;
    while i < rows.len() {
        let others: Vec<Row> = rows
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, r)| r.clone())
            .collect();
        let (objective, bound) = rows[i].clone();
        let (coeffs, rhs): (Vec<RatVector>, Vec<Rational>) = others.into_iter().unzip();
        let lp = LinearProgram::new(
            objective,
            RatMatrix::from_rows(ncols, coeffs).expect("row width"),
            rhs,
        )
        .expect("row count");
        let implied = match lp.solve() {
            LpOutcome::Optimal { value, .. } => value >= bound,
            LpOutcome::Infeasible { .. } => true,
            LpOutcome::Unbounded { .. } => false,
        };
        if implied {
            rows.remove(i);
        } else {
            i += 1;
        }
    }
    rows
}

fn rows_of(p: &HRep) -> Vec<Row> {
    p.rows().map(|(r, v)| (r.to_vec(), v.clone())).collect()
}

pub(super) fn remove_redundancy(p: &HRep) -> HRep {
    if p.is_empty() {
        return HRep::empty(p.dim());
    }
    let rows = tidy(rows_of(p)).expect("feasible system has no 0 >= positive row");
    to_hrep(p.dim(), filter_redundant(p.dim(), rows))
}

pub(super) fn project(p: &HRep, keep: &[usize]) -> Result<HRep> {
    let d = p.dim();
    let mut seen = vec![false; d];
    for &k in keep {
        if k >= d {
            return Err(Error::IndexOutOfRange { index: k, len: d });
        }
        if seen[k] {
            return Err(Error::format(
                "keep",
                format!("coordinate {k} listed twice"),
            ));
        }
        seen[k] = true;
    }
    if p.is_empty() {
        return Ok(HRep::empty(keep.len()));
    }

    // `columns[c]` is the original coordinate held in working column c.
    let mut columns: Vec<usize> = (0..d).collect();
    let mut rows = filter_redundant(d, tidy(rows_of(p)).expect("feasible"));

    loop {
        let candidates: Vec<usize> = (0..columns.len()).filter(|&c| !seen[columns[c]]).collect();
        // Eliminate the column producing the fewest combined rows first.
        let Some(&col) = candidates.iter().min_by_key(|&&c| {
            let pos = rows.iter().filter(|r| r.0[c].is_positive()).count();
            let neg = rows.iter().filter(|r| r.0[c].is_negative()).count();
            (pos * neg, c)
        }) else {
            break;
        };
        let mut next: Vec<Row> = Vec::new();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for row in &rows {
            let a = &row.0[col];
            if a.is_zero() {
                next.push(row.clone());
            } else if a.is_positive() {
                pos.push(row);
            } else {
                neg.push(row);
            }
        }
        for p_row in &pos {
            for n_row in &neg {
                let fp = -&n_row.0[col];
                let fn_ = p_row.0[col].clone();
                let coeffs = p_row
                    .0
                    .iter()
                    .zip(&n_row.0)
                    .map(|(x, y)| &fp * x + &fn_ * y)
                    .collect();
                next.push((coeffs, &fp * &p_row.1 + &fn_ * &n_row.1));
            }
        }
        for row in &mut next {
            row.0.remove(col);
        }
        columns.remove(col);
        let tidied = tidy(next).expect("projection of a feasible system is feasible");
        rows = filter_redundant(columns.len(), tidied);
    }

    let order: Vec<usize> = keep
        .iter()
        .map(|k| columns.iter().position(|c| c == k).expect("kept column"))
        .collect();
    let rows = rows
        .into_iter()
        .map(|(coeffs, rhs)| (order.iter().map(|&c| coeffs[c].clone()).collect(), rhs))
        .collect();
    Ok(to_hrep(keep.len(), rows))
}
