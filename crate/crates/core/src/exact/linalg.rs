//! Dense exact linear algebra: matrices over a [`Scalar`] field and affine
//! system solving by Gauss-Jordan elimination.
//!
//! The elimination uses leftmost-nonzero pivoting with a fixed row order, so
//! identical inputs always produce identical particular solutions and
//! identical ordered nullspace bases.

use crate::error::{Error, Result};
use crate::exact::scalar::Scalar;

/// Dense row-major matrix over an exact scalar field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Scalar> Matrix<K> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = K::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[K]) -> Result<Vec<K>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "matrix has {} columns, vector has {} entries",
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(K::zero(), |acc, (a, x)| acc + a.clone() * x.clone())
            })
            .collect())
    }
}

impl<K> std::ops::Index<(usize, usize)> for Matrix<K> {
    type Output = K;
    fn index(&self, (i, j): (usize, usize)) -> &K {
        &self.data[i * self.cols + j]
    }
}

impl<K> std::ops::IndexMut<(usize, usize)> for Matrix<K> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut K {
        &mut self.data[i * self.cols + j]
    }
}

/// Outcome of solving `A x = b` over the scalar field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolveResult<K> {
    pub feasible: bool,
    /// One exact solution (free variables set to zero), when feasible.
    pub particular: Option<Vec<K>>,
    /// Basis of `ker(A)`, one vector per free column, in column order.
    pub nullspace_basis: Vec<Vec<K>>,
    pub rank: usize,
}

/// Solve the affine system `A x = b` exactly.
///
/// Returns feasibility, a particular solution and a nullspace basis. Pivoting
/// is leftmost-nonzero with full reduction; each pivot row is rescaled to a
/// primitive form (via `Scalar::normalize_row`) before it is used to
/// eliminate, which bounds coefficient growth.
pub fn solve_affine<K: Scalar>(a: &Matrix<K>, b: &[K]) -> Result<AffineSolveResult<K>> {
    if b.len() != a.nrows() {
        return Err(Error::Dimension(format!(
            "matrix has {} rows, rhs has {} entries",
            a.nrows(),
            b.len()
        )));
    }
    let m = a.nrows();
    let n = a.ncols();
    // Augmented working copy [A | b].
    let mut aug: Vec<Vec<K>> = (0..m)
        .map(|i| {
            let mut row: Vec<K> = a.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();

    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for col in 0..n {
        let Some(pr) = (r..m).find(|&i| !aug[i][col].is_zero()) else {
            continue;
        };
        aug.swap(r, pr);
        K::normalize_row(&mut aug[r]);
        let pivot_inv = aug[r][col].inv().expect("nonzero pivot");
        for i in 0..m {
            if i != r && !aug[i][col].is_zero() {
                let factor = aug[i][col].clone() * pivot_inv.clone();
                for j in col..=n {
                    let delta = factor.clone() * aug[r][j].clone();
                    aug[i][j] = aug[i][j].clone() - delta;
                }
            }
        }
        pivot_cols.push(col);
        r += 1;
        if r == m {
            break;
        }
    }
    let rank = pivot_cols.len();

    // Inconsistent row: all-zero coefficients with nonzero rhs.
    let feasible = aug
        .iter()
        .all(|row| row[..n].iter().any(|x| !x.is_zero()) || row[n].is_zero());

    if !feasible {
        return Ok(AffineSolveResult {
            feasible: false,
            particular: None,
            nullspace_basis: Vec::new(),
            rank,
        });
    }

    // Scale pivot rows so each pivot is one; rows are already fully reduced.
    for (i, &pc) in pivot_cols.iter().enumerate() {
        let inv = aug[i][pc].inv().expect("nonzero pivot");
        for j in pc..=n {
            aug[i][j] = aug[i][j].clone() * inv.clone();
        }
    }

    let mut particular = vec![K::zero(); n];
    for (i, &pc) in pivot_cols.iter().enumerate() {
        particular[pc] = aug[i][n].clone();
    }

    let mut nullspace_basis = Vec::new();
    let mut next_pivot = 0usize;
    for col in 0..n {
        if next_pivot < pivot_cols.len() && pivot_cols[next_pivot] == col {
            next_pivot += 1;
            continue;
        }
        let mut v = vec![K::zero(); n];
        v[col] = K::one();
        for (i, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -aug[i][col].clone();
        }
        nullspace_basis.push(v);
    }

    Ok(AffineSolveResult {
        feasible: true,
        particular: Some(particular),
        nullspace_basis,
        rank,
    })
}

/// Feasibility of `A x = b` without materializing the nullspace.
pub fn is_feasible<K: Scalar>(a: &Matrix<K>, b: &[K]) -> Result<bool> {
    if b.len() != a.nrows() {
        return Err(Error::Dimension(format!(
            "matrix has {} rows, rhs has {} entries",
            a.nrows(),
            b.len()
        )));
    }
    let m = a.nrows();
    let n = a.ncols();
    let mut aug: Vec<Vec<K>> = (0..m)
        .map(|i| {
            let mut row: Vec<K> = a.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut r = 0usize;
    for col in 0..n {
        let Some(pr) = (r..m).find(|&i| !aug[i][col].is_zero()) else {
            continue;
        };
        aug.swap(r, pr);
        K::normalize_row(&mut aug[r]);
        let pivot_inv = aug[r][col].inv().expect("nonzero pivot");
        for i in (r + 1)..m {
            if !aug[i][col].is_zero() {
                let factor = aug[i][col].clone() * pivot_inv.clone();
                for j in col..=n {
                    let delta = factor.clone() * aug[r][j].clone();
                    aug[i][j] = aug[i][j].clone() - delta;
                }
            }
        }
        r += 1;
        if r == m {
            break;
        }
    }
    Ok(aug
        .iter()
        .all(|row| row[..n].iter().any(|x| !x.is_zero()) || row[n].is_zero()))
}
