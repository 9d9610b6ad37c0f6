//! Dense exact linear algebra: matrices, reduced row echelon form, and
//! subspaces stored by their canonical RREF basis.
//!
//! Tensor products always put the left operand in the major position: the
//! basis vector `e_i (x) f_j` of `A (x) B` has index `i * dim B + j`.

mod matrix;
mod subspace;

use alloc::vec::Vec;

use crate::field::Field;

pub use matrix::Matrix;
pub use subspace::{tensor_vectors, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("shape mismatch: expected {expected:?}, found {found:?}")]
    ShapeMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("subspaces live in spaces of dimension {0} and {1}")]
    AmbientMismatch(usize, usize),
    #[error("first subspace is not contained in the second")]
    NotASubspace,
    #[error("matrix is {0}x{1}, expected square")]
    NotSquare(usize, usize),
    #[error("matrix is singular")]
    Singular,
}

/// Reduced row echelon form with its zero rows removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<E> {
    pub matrix: Matrix<E>,
    pub pivots: Vec<usize>,
}

/// Gauss-Jordan elimination. Rows are fully reduced after every pivot.
pub fn rref<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Rref<F::Elem> {
    let cols = m.cols();
    let (rows, pivots) = rref_rows(field, cols, m.to_rows());
    Rref {
        matrix: Matrix::from_rows(cols, rows).expect("rows keep their width"),
        pivots,
    }
}

pub(crate) fn rref_rows<F: Field>(
    field: &F,
    cols: usize,
    mut rows: Vec<Vec<F::Elem>>,
) -> (Vec<Vec<F::Elem>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]).expect("pivot is nonzero");
        if !field.is_one(&inv) {
            for x in rows[r][c..].iter_mut() {
                if !field.is_zero(x) {
                    *x = field.mul(x, &inv);
                }
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, tail) = tail.split_first_mut().expect("row r exists");
        for row in head.iter_mut().chain(tail.iter_mut()) {
            if field.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !field.is_zero(y) {
                    *x = field.sub(x, &field.mul(&factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// The null space `{v : m v = 0}`.
pub fn kernel<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Subspace<F::Elem> {
    let n = m.cols();
    let reduced = rref(field, m);
    let mut is_pivot = alloc::vec![false; n];
    for &p in &reduced.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|&j| !is_pivot[j]) {
        let mut v = alloc::vec![field.zero(); n];
        v[free] = field.one();
        for (i, &p) in reduced.pivots.iter().enumerate() {
            v[p] = field.neg(reduced.matrix.get(i, free));
        }
        basis.push(v);
    }
    Subspace::span(field, n, basis).expect("kernel vectors have ambient length")
}
