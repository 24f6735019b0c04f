//! Exact phase-1 simplex over the rationals: decides whether `A x = b` has a
//! solution `x >= 0` and returns either a solution or a Farkas certificate.
//!
//! Rows are stored sparsely. Pivoting follows Bland's rule, so the method
//! terminates without cycling.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::Rational;

type SparseRow = Vec<(usize, Rational)>;

/// Equality system `A x = b`, `x >= 0`, with `A` given row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualitySystem {
    pub cols: usize,
    /// Each row as `(column, coefficient)` pairs, any order, no duplicates.
    pub rows: Vec<SparseRow>,
    pub rhs: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Phase1 {
    Feasible { x: Vec<Rational>, pivots: usize },
    /// `y` with `yᵀA <= 0` componentwise and `yᵀb > 0`.
    Infeasible { farkas: Vec<Rational>, pivots: usize },
}

impl EqualitySystem {
    pub fn new(cols: usize, rows: Vec<SparseRow>, rhs: Vec<Rational>) -> Self {
        assert_eq!(rows.len(), rhs.len());
        assert!(rows.iter().flatten().all(|(c, _)| *c < cols));
        EqualitySystem { cols, rows, rhs }
    }

    pub fn residual(&self, x: &[Rational]) -> Vec<Rational> {
        self.rows
            .iter()
            .zip(&self.rhs)
            .map(|(row, b)| b - row.iter().map(|(c, a)| a * &x[*c]).sum::<Rational>())
            .collect()
    }

    pub fn is_solution(&self, x: &[Rational]) -> bool {
        x.len() == self.cols
            && x.iter().all(|v| !v.is_negative())
            && self.residual(x).iter().all(Zero::is_zero)
    }

    pub fn is_farkas_certificate(&self, y: &[Rational]) -> bool {
        if y.len() != self.rows.len() {
            return false;
        }
        let mut yta = vec![Rational::zero(); self.cols];
        for (row, yi) in self.rows.iter().zip(y) {
            for (c, a) in row {
                yta[*c] += a * yi;
            }
        }
        let ytb: Rational = y.iter().zip(&self.rhs).map(|(a, b)| a * b).sum();
        yta.iter().all(|v| !v.is_positive()) && ytb.is_positive()
    }
}

fn normalize(mut row: SparseRow) -> SparseRow {
    row.retain(|(_, a)| !a.is_zero());
    row.sort_by_key(|(c, _)| *c);
    row
}

fn lookup(row: &SparseRow, col: usize) -> Option<&Rational> {
    row.binary_search_by_key(&col, |(c, _)| *c).ok().map(|i| &row[i].1)
}

/// `row - f * pivot`.
fn axpy(row: &SparseRow, f: &Rational, pivot: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let order = match (row.get(i), pivot.get(j)) {
            (Some(a), Some(b)) => a.0.cmp(&b.0),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match order {
            Ordering::Less => {
                out.push(row[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((pivot[j].0, -(f * &pivot[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let v = &row[i].1 - f * &pivot[j].1;
                if !v.is_zero() {
                    out.push((row[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Basic {
    Structural(usize),
    Artificial(usize),
}

/// Minimizes the sum of one artificial variable per row. Artificial columns
/// are never re-entered, so the tableau keeps structural columns only.
pub fn phase1(system: &EqualitySystem) -> Phase1 {
    let m = system.rows.len();
    let mut rows: Vec<SparseRow> = Vec::with_capacity(m);
    let mut rhs: Vec<Rational> = Vec::with_capacity(m);
    for (row, b) in system.rows.iter().zip(&system.rhs) {
        let row = normalize(row.clone());
        if b.is_negative() {
            rows.push(row.into_iter().map(|(c, a)| (c, -a)).collect());
            rhs.push(-b.clone());
        } else {
            rows.push(row);
            rhs.push(b.clone());
        }
    }
    let mut basis: Vec<Basic> = (0..m).map(Basic::Artificial).collect();
    // reduced costs of the structural columns: minus the sum of rows whose
    // basic variable is artificial
    let mut objective: SparseRow = Vec::new();
    for row in &rows {
        objective = axpy(&objective, &Rational::one(), row);
    }
    let mut pivots = 0;
    loop {
        // Bland: least entering index with negative reduced cost
        let entering = objective.iter().find(|(_, r)| r.is_negative()).map(|(c, _)| *c);
        let Some(col) = entering else { break };

        let mut best: Option<(usize, Rational)> = None;
        for (i, row) in rows.iter().enumerate() {
            let Some(a) = lookup(row, col).filter(|a| a.is_positive()) else {
                continue;
            };
            let ratio = &rhs[i] / a;
            let better = match &best {
                None => true,
                Some((bi, br)) => ratio < *br || (ratio == *br && basis[i] < basis[*bi]),
            };
            if better {
                best = Some((i, ratio));
            }
        }
        let (r, _) = best.expect("phase-1 objective is bounded below");

        let inv = lookup(&rows[r], col).unwrap().recip();
        let pivot_row: SparseRow = rows[r].iter().map(|(c, a)| (*c, a * &inv)).collect();
        let pivot_rhs = &rhs[r] * &inv;
        for i in 0..m {
            if i == r {
                continue;
            }
            if let Some(f) = lookup(&rows[i], col).cloned() {
                rows[i] = axpy(&rows[i], &f, &pivot_row);
                rhs[i] = &rhs[i] - &f * &pivot_rhs;
            }
        }
        let f = lookup(&objective, col).cloned().unwrap();
        objective = axpy(&objective, &f, &pivot_row);
        rows[r] = pivot_row;
        rhs[r] = pivot_rhs;
        basis[r] = Basic::Structural(col);
        pivots += 1;
    }

    let infeasibility: Rational = basis
        .iter()
        .zip(&rhs)
        .filter(|(b, _)| matches!(b, Basic::Artificial(_)))
        .map(|(_, v)| v.clone())
        .sum();
    if infeasibility.is_zero() {
        let mut x = vec![Rational::zero(); system.cols];
        for (b, v) in basis.iter().zip(&rhs) {
            if let Basic::Structural(c) = b {
                x[*c] = v.clone();
            }
        }
        Phase1::Feasible { x, pivots }
    } else {
        let farkas = farkas_from_basis(system, &basis);
        Phase1::Infeasible { farkas, pivots }
    }
}

/// Simplex multipliers `y` solving `yᵀB = c_B` for the final basis, where
/// `c` is 1 on artificials and 0 on structural columns, mapped back through
/// the row sign flips.
fn farkas_from_basis(system: &EqualitySystem, basis: &[Basic]) -> Vec<Rational> {
    let m = system.rows.len();
    let signs: Vec<Rational> = system
        .rhs
        .iter()
        .map(|b| if b.is_negative() { -Rational::one() } else { Rational::one() })
        .collect();
    // columns of B in sign-flipped coordinates, as a dense m × m matrix
    let mut b_cols = vec![vec![Rational::zero(); m]; m];
    let mut cost = vec![Rational::zero(); m];
    for (k, basic) in basis.iter().enumerate() {
        match *basic {
            Basic::Artificial(i) => {
                b_cols[k][i] = Rational::one();
                cost[k] = Rational::one();
            }
            Basic::Structural(c) => {
                for (i, row) in system.rows.iter().enumerate() {
                    if let Some((_, a)) = row.iter().find(|(cc, _)| *cc == c) {
                        b_cols[k][i] = a * &signs[i];
                    }
                }
            }
        }
    }
    // yᵀB = c_B  <=>  Bᵀ y = c_B; row k of Bᵀ is column k of B
    let y = solve_dense(b_cols, cost);
    y.into_iter().zip(signs).map(|(v, s)| v * s).collect()
}

/// Gauss-Jordan on a nonsingular square system.
fn solve_dense(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Vec<Rational> {
    let n = a.len();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("basis matrix is nonsingular");
        a.swap(c, p);
        b.swap(c, p);
        let inv = a[c][c].recip();
        for v in a[c].iter_mut() {
            *v *= &inv;
        }
        b[c] *= &inv;
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let pivot = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
                let bc = b[c].clone();
                b[r] -= &f * bc;
            }
        }
    }
    b
}
