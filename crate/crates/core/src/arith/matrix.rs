use num_traits::{One, Zero};

use super::{RatVector, Rational};
use crate::error::{Error, Result};

/// Dense row-major rational matrix with fixed dimensions.
///
/// A matrix may have zero rows; the column count is still meaningful.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    nrows: usize,
    ncols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        RatMatrix {
            nrows,
            ncols,
            data: vec![Rational::zero(); nrows * ncols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows, each of which must have `ncols` entries.
    pub fn from_rows(ncols: usize, rows: Vec<RatVector>) -> Result<Self> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::dims("matrix row", ncols, row.len()));
            }
            data.extend(row);
        }
        Ok(RatMatrix { nrows, ncols, data })
    }

    /// Integer matrix literal; all rows must have equal length.
    pub fn from_i64(ncols: usize, rows: &[&[i64]]) -> Self {
        Self::from_rows(ncols, rows.iter().map(|r| super::int_vec(r)).collect())
            .expect("ragged integer matrix literal")
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.ncols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.ncols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.ncols..(r + 1) * self.ncols]
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[Rational]> + '_ {
        (0..self.nrows).map(move |r| self.row(r))
    }

    pub fn column(&self, c: usize) -> RatVector {
        (0..self.nrows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<RatVector> {
        self.rows().map(<[Rational]>::to_vec).collect()
    }

    pub fn push_row(&mut self, row: &[Rational]) -> Result<()> {
        if row.len() != self.ncols {
            return Err(Error::dims("matrix row", self.ncols, row.len()));
        }
        self.data.extend_from_slice(row);
        self.nrows += 1;
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ncols, self.nrows);
        for r in 0..self.nrows {
            for c in 0..self.ncols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_columns(&self, columns: &[usize]) -> Self {
        let rows = self
            .rows()
            .map(|row| columns.iter().map(|&c| row[c].clone()).collect())
            .collect();
        Self::from_rows(columns.len(), rows).expect("column selection")
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &RatMatrix) -> Result<Self> {
        if self.nrows != other.nrows {
            return Err(Error::dims("hstack rows", self.nrows, other.nrows));
        }
        let rows = self
            .rows()
            .zip(other.rows())
            .map(|(a, b)| a.iter().chain(b).cloned().collect())
            .collect();
        Self::from_rows(self.ncols + other.ncols, rows)
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<Self> {
        if self.ncols != other.nrows {
            return Err(Error::dims("matrix product", self.ncols, other.nrows));
        }
        let mut out = Self::zeros(self.nrows, other.ncols);
        for r in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.ncols {
                    let v = out.get(r, c) + a * other.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        RatMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn mat_vec(m: &RatMatrix, v: &[Rational]) -> Result<RatVector> {
    if m.ncols() != v.len() {
        return Err(Error::dims("matrix-vector product", m.ncols(), v.len()));
    }
    Ok(m.rows().map(|row| dot(row, v)).collect())
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(rows: &mut [RatVector], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[RatVector]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let mut work = rows.to_vec();
    rref(&mut work, first.len()).len()
}

/// Basis of `{z : row · z = 0 for every row}` in `R^ncols`.
pub fn nullspace(rows: &[RatVector], ncols: usize) -> Vec<RatVector> {
    let mut work = rows.to_vec();
    let pivots = rref(&mut work, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = super::zeros(ncols);
        v[free] = Rational::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -&work[r][free];
        }
        basis.push(super::primitive_unsigned(&v));
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, int_vec};

    #[test]
    fn products() {
        let m = RatMatrix::from_i64(2, &[&[1, 2], &[3, 4]]);
        assert_eq!(mat_vec(&m, &int_vec(&[1, 1])).unwrap(), int_vec(&[3, 7]));
        let v = int_vec(&[5, -2]);
        assert_eq!(mat_vec(&RatMatrix::identity(2), &v).unwrap(), v);
        assert_eq!(
            mat_vec(&RatMatrix::zeros(3, 2), &v).unwrap(),
            int_vec(&[0, 0, 0])
        );
        assert!(matches!(
            mat_vec(&m, &int_vec(&[1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn rank_and_kernel() {
        let rows = vec![
            int_vec(&[1, 2, 3]),
            int_vec(&[2, 4, 6]),
            int_vec(&[0, 1, 1]),
        ];
        assert_eq!(rank(&rows), 2);
        let kernel = nullspace(&rows, 3);
        assert_eq!(kernel.len(), 1);
        for row in &rows {
            assert_eq!(dot(row, &kernel[0]), int(0));
        }
        assert_eq!(nullspace(&[], 2).len(), 2);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(RatMatrix::from_rows(2, vec![int_vec(&[1])]).is_err());
        let mut m = RatMatrix::zeros(0, 2);
        assert!(m.push_row(&int_vec(&[1, 2, 3])).is_err());
        m.push_row(&int_vec(&[1, 2])).unwrap();
        assert_eq!(m.nrows(), 1);
    }
}
