//! Dense matrices over exact rationals.

use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(cols: &[Vec<Rational>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Solves `self · X = rhs` by Gauss-Jordan elimination.
    pub fn solve(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        assert_eq!(self.rows, self.cols, "square system expected");
        assert_eq!(self.rows, rhs.rows, "dimension mismatch");
        let n = self.rows;
        let w = rhs.cols;
        let mut a: Vec<Vec<Rational>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut b: Vec<Vec<Rational>> = (0..n).map(|i| rhs.row(i).to_vec()).collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::Singular)?;
            a.swap(col, pivot);
            b.swap(col, pivot);
            let inv = Rational::one() / &a[col][col];
            if !inv.is_one() {
                for v in a[col].iter_mut().skip(col) {
                    *v *= &inv;
                }
                for v in b[col].iter_mut() {
                    *v *= &inv;
                }
            }
            let (prow_a, prow_b) = (a[col].clone(), b[col].clone());
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in col..n {
                    if !prow_a[c].is_zero() {
                        let t = &f * &prow_a[c];
                        a[r][c] -= t;
                    }
                }
                for c in 0..w {
                    if !prow_b[c].is_zero() {
                        let t = &f * &prow_b[c];
                        b[r][c] -= t;
                    }
                }
            }
        }
        Ok(RatMatrix::from_rows(b).with_shape(n, w))
    }

    pub fn inverse(&self) -> Result<RatMatrix> {
        self.solve(&Self::identity(self.rows))
    }

    fn with_shape(mut self, rows: usize, cols: usize) -> Self {
        self.rows = rows;
        self.cols = cols;
        self
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn inverse_of_small_matrix() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv, m(&[&[1, -1], &[-1, 2]]));
        assert!(a.mul(&inv).is_identity());
    }

    #[test]
    fn needs_row_swap_and_fractions() {
        let a = m(&[&[0, 3, 1], &[2, 0, 0], &[1, 1, 4]]);
        let inv = a.inverse().unwrap();
        assert!(inv.mul(&a).is_identity());
        assert_eq!(inv[(1, 1)], frac(1, 22));
    }

    #[test]
    fn singular_is_reported() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(a.inverse(), Err(Error::Singular));
    }

    #[test]
    fn hilbert_inverse_is_exact() {
        let n = 7;
        let h = RatMatrix::from_rows(
            (0..n)
                .map(|i| (0..n).map(|j| frac(1, (i + j + 1) as i64)).collect())
                .collect(),
        );
        let inv = h.inverse().unwrap();
        assert!(h.mul(&inv).is_identity());
        // known corner entry of the order-7 Hilbert inverse
        assert_eq!(inv[(0, 0)], int(49));
    }

    #[test]
    fn empty_matrix() {
        let e = RatMatrix::identity(0);
        assert!(e.inverse().unwrap().is_identity());
    }
}
