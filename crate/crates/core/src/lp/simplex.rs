//! Dense two-phase tableau simplex over exact rationals with Bland's rule.

use num_traits::{One, Signed, Zero};

use super::{LinearProgram, LpOutcome};
use crate::arith::{RatVector, Rational};

/// How an original variable maps onto nonnegative tableau columns.
#[derive(Debug, Clone, Copy)]
enum VarColumns {
    /// `z >= 0` was stated as a sign row; one column.
    Nonneg { col: usize, sign_row: usize },
    /// `z = pos - neg`.
    Free { pos: usize, neg: usize },
}

struct Tableau {
    /// Constraint rows; the last entry of each row is the right-hand side.
    rows: Vec<Vec<Rational>>,
    /// Reduced costs; the last entry is minus the objective value.
    cost: Vec<Rational>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Rational {
        &self.rows[r][self.ncols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        if !inv.is_one() {
            for x in self.rows[r].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let nonzero: Vec<usize> = (0..=self.ncols)
            .filter(|&j| !pivot_row[j].is_zero())
            .collect();
        let eliminate = |row: &mut Vec<Rational>| {
            if row[c].is_zero() {
                return;
            }
            let f = row[c].clone();
            for &j in &nonzero {
                row[j] -= &f * &pivot_row[j];
            }
        };
        for row in self.rows.iter_mut() {
            if !row.is_empty() {
                eliminate(row);
            }
        }
        eliminate(&mut self.cost);
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    /// Runs Bland's rule until optimal (`Ok`) or an entering column without a
    /// positive entry is found (`Err(column)`).
    fn run(&mut self, may_enter: &[bool]) -> Result<(), usize> {
        loop {
            let Some(enter) = (0..self.ncols).find(|&j| may_enter[j] && self.cost[j].is_negative())
            else {
                return Ok(());
            };
            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(r) / a;
                let better = match &leave {
                    None => true,
                    Some((best, best_ratio)) => {
                        ratio < *best_ratio
                            || (ratio == *best_ratio && self.basis[r] < self.basis[*best])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, enter),
                None => return Err(enter),
            }
        }
    }

    fn basic_values(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.ncols];
        for (r, &b) in self.basis.iter().enumerate() {
            x[b] = self.rhs(r).clone();
        }
        x
    }

    fn reset_cost(&mut self, costs: &[Rational]) {
        let mut cost: Vec<Rational> = costs.to_vec();
        cost.push(Rational::zero());
        for (r, &b) in self.basis.iter().enumerate() {
            let cb = &costs[b];
            if cb.is_zero() {
                continue;
            }
            for (x, t) in cost.iter_mut().zip(&self.rows[r]) {
                if !t.is_zero() {
                    *x -= cb * t;
                }
            }
        }
        self.cost = cost;
    }
}

pub(super) fn solve(lp: &LinearProgram) -> LpOutcome {
    let nvars = lp.num_vars();
    let g = lp.constraints();
    let h = lp.rhs();
    let e = lp.equalities();
    let f = lp.eq_rhs();

    // Sign rows `a·z_k >= 0` with a > 0 become column bounds.
    let mut sign_row_of: Vec<Option<usize>> = vec![None; nvars];
    let mut is_sign_row = vec![false; g.nrows()];
    for (i, row) in g.rows().enumerate() {
        if !h[i].is_zero() {
            continue;
        }
        let mut support = row.iter().enumerate().filter(|(_, x)| !x.is_zero());
        if let (Some((k, a)), None) = (support.next(), support.next()) {
            if a.is_positive() && sign_row_of[k].is_none() {
                sign_row_of[k] = Some(i);
                is_sign_row[i] = true;
            }
        }
    }

    let mut vars = Vec::with_capacity(nvars);
    let mut ncols = 0;
    for sign_row in &sign_row_of {
        match *sign_row {
            Some(sign_row) => {
                vars.push(VarColumns::Nonneg {
                    col: ncols,
                    sign_row,
                });
                ncols += 1;
            }
            None => {
                vars.push(VarColumns::Free {
                    pos: ncols,
                    neg: ncols + 1,
                });
                ncols += 2;
            }
        }
    }

    let kept: Vec<usize> = (0..g.nrows()).filter(|&i| !is_sign_row[i]).collect();
    let nrows = kept.len() + e.nrows();
    let slack_start = ncols;
    ncols += kept.len();

    // Row r: coefficient row, rhs, and whether it was negated.
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(nrows);
    let mut flipped = Vec::with_capacity(nrows);
    let mut needs_artificial = Vec::with_capacity(nrows);
    let spread = |src: &[Rational], out: &mut Vec<Rational>| {
        for (k, v) in vars.iter().enumerate() {
            match *v {
                VarColumns::Nonneg { col, .. } => out[col] = src[k].clone(),
                VarColumns::Free { pos, neg } => {
                    out[pos] = src[k].clone();
                    out[neg] = -&src[k];
                }
            }
        }
    };
    for (r, &i) in kept.iter().enumerate() {
        let mut row = vec![Rational::zero(); ncols];
        spread(g.row(i), &mut row);
        row[slack_start + r] = -Rational::one();
        let flip = !h[i].is_positive();
        flipped.push(flip);
        needs_artificial.push(!flip);
        row.push(h[i].clone());
        rows.push(row);
    }
    for (erow, fi) in e.rows().zip(f) {
        let mut row = vec![Rational::zero(); ncols];
        spread(erow, &mut row);
        row.push(fi.clone());
        flipped.push(fi.is_negative());
        needs_artificial.push(true);
        rows.push(row);
    }
    for (row, &flip) in rows.iter_mut().zip(&flipped) {
        if flip {
            for x in row.iter_mut() {
                *x = -&*x;
            }
        }
    }

    // Initial identity basis: flipped slack or an artificial column per row.
    let art_start = ncols;
    let nart = needs_artificial.iter().filter(|&&a| a).count();
    ncols += nart;
    let mut basis = Vec::with_capacity(nrows);
    let mut next_art = art_start;
    for (r, row) in rows.iter_mut().enumerate() {
        let rhs = row.pop().expect("rhs");
        row.resize(ncols, Rational::zero());
        if needs_artificial[r] {
            row[next_art] = Rational::one();
            basis.push(next_art);
            next_art += 1;
        } else {
            basis.push(slack_start + r);
        }
        row.push(rhs);
    }
    let initial_basis = basis.clone();

    let mut tab = Tableau {
        rows,
        cost: Vec::new(),
        basis,
        ncols,
    };

    // y'_r = c_init(r) - d_init(r) for the current cost vector.
    let row_duals = |tab: &Tableau, costs: &[Rational]| -> Vec<Rational> {
        initial_basis
            .iter()
            .zip(&flipped)
            .map(|(&col, &flip)| {
                let y = &costs[col] - &tab.cost[col];
                if flip {
                    -y
                } else {
                    y
                }
            })
            .collect()
    };
    let split_duals = |y: &[Rational]| -> (RatVector, RatVector) {
        let mut duals = vec![Rational::zero(); g.nrows()];
        for (r, &i) in kept.iter().enumerate() {
            duals[i] = y[r].clone();
        }
        (duals, y[kept.len()..].to_vec())
    };
    // Sign-row multipliers absorb the remaining reduced cost of their column.
    let fill_sign_rows = |tab: &Tableau, duals: &mut RatVector| {
        for (k, v) in vars.iter().enumerate() {
            if let VarColumns::Nonneg { col, sign_row } = *v {
                duals[sign_row] = &tab.cost[col] / &g.row(sign_row)[k];
            }
        }
    };

    if nart > 0 {
        let mut phase1 = vec![Rational::zero(); ncols];
        for c in phase1.iter_mut().skip(art_start) {
            *c = Rational::one();
        }
        tab.reset_cost(&phase1);
        let may_enter = vec![true; ncols];
        tab.run(&may_enter)
            .expect("phase one is bounded below by zero");
        if tab.cost[ncols].is_negative() {
            let y = row_duals(&tab, &phase1);
            let (mut farkas, eq_farkas) = split_duals(&y);
            fill_sign_rows(&tab, &mut farkas);
            return LpOutcome::Infeasible { farkas, eq_farkas };
        }
        // Drive zero-level artificials out where the row allows it.
        for r in 0..nrows {
            if tab.basis[r] < art_start {
                continue;
            }
            if let Some(c) = (0..art_start).find(|&j| !tab.rows[r][j].is_zero()) {
                tab.pivot(r, c);
            }
        }
    }

    let mut costs = vec![Rational::zero(); ncols];
    for (k, v) in vars.iter().enumerate() {
        let c = &lp.objective()[k];
        match *v {
            VarColumns::Nonneg { col, .. } => costs[col] = c.clone(),
            VarColumns::Free { pos, neg } => {
                costs[pos] = c.clone();
                costs[neg] = -c;
            }
        }
    }
    tab.reset_cost(&costs);
    let mut may_enter = vec![true; ncols];
    for m in may_enter.iter_mut().skip(art_start) {
        *m = false;
    }
    let result = tab.run(&may_enter);

    let x = tab.basic_values();
    let to_original = |x: &[Rational]| -> RatVector {
        vars.iter()
            .map(|v| match *v {
                VarColumns::Nonneg { col, .. } => x[col].clone(),
                VarColumns::Free { pos, neg } => &x[pos] - &x[neg],
            })
            .collect()
    };
    let point = to_original(&x);

    match result {
        Ok(()) => {
            let y = row_duals(&tab, &costs);
            let (mut duals, eq_duals) = split_duals(&y);
            fill_sign_rows(&tab, &mut duals);
            let value = -tab.cost[ncols].clone();
            LpOutcome::Optimal {
                point,
                value,
                duals,
                eq_duals,
            }
        }
        Err(enter) => {
            let mut d = vec![Rational::zero(); ncols];
            d[enter] = Rational::one();
            for (r, &b) in tab.basis.iter().enumerate() {
                d[b] = -&tab.rows[r][enter];
            }
            LpOutcome::Unbounded {
                point,
                ray: to_original(&d),
            }
        }
    }
}
