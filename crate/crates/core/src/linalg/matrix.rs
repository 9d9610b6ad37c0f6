use alloc::vec;
use alloc::vec::Vec;

use crate::field::Field;

use super::LinalgError;

/// A dense row-major matrix of field elements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<E>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::ShapeMismatch {
                expected: (rows, cols),
                found: (data.len(), 1),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::ShapeMismatch {
                    expected: (n, cols),
                    found: (n, r.len()),
                });
            }
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[E]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        self.row_iter().map(<[E]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch {
                expected: (other.rows, self.cols),
                found: (other.rows, other.cols),
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::ShapeMismatch {
                expected: (self.cols, rhs.cols),
                found: (rhs.rows, rhs.cols),
            });
        }
        let mut out = Self::zeros(field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !field.is_zero(b) {
                        let idx = i * rhs.cols + j;
                        out.data[idx] = field.add(&out.data[idx], &field.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, rhs: &Self) -> Result<Self, LinalgError> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(LinalgError::ShapeMismatch {
                expected: (self.rows, self.cols),
                found: (rhs.rows, rhs.cols),
            });
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| field.sub(a, b)).collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Applies the matrix to a column vector.
    pub fn apply<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        self.row_iter()
            .map(|row| {
                row.iter().zip(v).fold(field.zero(), |acc, (a, b)| {
                    if field.is_zero(a) || field.is_zero(b) {
                        acc
                    } else {
                        field.add(&acc, &field.mul(a, b))
                    }
                })
            })
            .collect()
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.data.iter().all(|x| field.is_zero(x))
    }

    pub fn is_identity<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        field.is_one(x)
                    } else {
                        field.is_zero(x)
                    }
                })
            })
    }

    /// Kronecker product with `self` as the major (left) factor:
    /// entry `(ia * rb + ib, ja * cb + jb)` is `self[ia][ja] * rhs[ib][jb]`.
    pub fn tensor<F: Field<Elem = E>>(&self, field: &F, rhs: &Self) -> Self {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let zero = field.zero();
        let mut data = vec![zero; rows * cols];
        for ia in 0..self.rows {
            for ja in 0..self.cols {
                let a = self.get(ia, ja);
                if field.is_zero(a) {
                    continue;
                }
                for ib in 0..rhs.rows {
                    for jb in 0..rhs.cols {
                        let b = rhs.get(ib, jb);
                        if !field.is_zero(b) {
                            data[(ia * rhs.rows + ib) * cols + ja * rhs.cols + jb] = field.mul(a, b);
                        }
                    }
                }
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rank<F: Field<Elem = E>>(&self, field: &F) -> usize {
        super::rref(field, self).pivots.len()
    }

    /// Inverse by Gauss-Jordan on `[self | I]`.
    pub fn inverse<F: Field<Elem = E>>(&self, field: &F) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.clone());
        }
        let mut aug = Vec::with_capacity(n * 2 * n);
        for i in 0..n {
            aug.extend_from_slice(self.row(i));
            for j in 0..n {
                aug.push(if i == j { field.one() } else { field.zero() });
            }
        }
        let aug = Matrix {
            rows: n,
            cols: 2 * n,
            data: aug,
        };
        let reduced = super::rref(field, &aug);
        if reduced.pivots.len() < n || reduced.pivots[n - 1] != n - 1 {
            return Err(LinalgError::Singular);
        }
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            data.extend_from_slice(&reduced.matrix.row(i)[n..]);
        }
        Ok(Matrix { rows: n, cols: n, data })
    }
}
