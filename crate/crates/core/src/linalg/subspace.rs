use alloc::vec;
use alloc::vec::Vec;

use crate::field::Field;

use super::{rref_rows, LinalgError, Matrix};

/// A subspace of `k^ambient`, held as the rows of its reduced row echelon
/// basis. Two subspaces are equal iff their bases are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<E> {
    ambient: usize,
    basis: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

impl<E: Clone + PartialEq> Subspace<E> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full<F: Field<Elem = E>>(field: &F, ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![field.zero(); ambient];
                v[i] = field.one();
                v
            })
            .collect();
        Subspace {
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    /// The span of arbitrary vectors of length `ambient`.
    pub fn span<F: Field<Elem = E>>(field: &F, ambient: usize, vectors: Vec<Vec<E>>) -> Result<Self, LinalgError> {
        if let Some(bad) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(LinalgError::AmbientMismatch(ambient, bad.len()));
        }
        let (basis, pivots) = rref_rows(field, ambient, vectors);
        Ok(Subspace { ambient, basis, pivots })
    }

    /// The row space of `m`.
    pub fn row_space<F: Field<Elem = E>>(field: &F, m: &Matrix<E>) -> Self {
        Self::span(field, m.cols(), m.to_rows()).expect("rows have matrix width")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<E>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix<E> {
        Matrix::from_rows(self.ambient, self.basis.clone()).expect("basis rows have ambient width")
    }

    /// Coordinates of `v` in this basis, or `None` when `v` is not in the span.
    pub fn coordinates<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Option<Vec<E>> {
        assert_eq!(v.len(), self.ambient, "vector length must match ambient dimension");
        let coords: Vec<E> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, row) in coords.iter().zip(&self.basis) {
            if field.is_zero(c) {
                continue;
            }
            for (x, y) in residual.iter_mut().zip(row) {
                if !field.is_zero(y) {
                    *x = field.sub(x, &field.mul(c, y));
                }
            }
        }
        residual.iter().all(|x| field.is_zero(x)).then_some(coords)
    }

    pub fn contains<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> bool {
        self.coordinates(field, v).is_some()
    }

    pub fn is_subspace_of<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(field, v))
    }

    fn check_ambient(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(LinalgError::AmbientMismatch(self.ambient, other.ambient))
        }
    }

    pub fn sum<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Self::span(field, self.ambient, rows)
    }

    /// Intersection by the Zassenhaus construction: row reduce
    /// `[[s, s], [t, 0]]`; rows whose left half vanishes carry the
    /// intersection in their right half.
    pub fn intersect<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient));
        }
        let n = self.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for v in &self.basis {
            let mut r = v.clone();
            r.extend(v.iter().cloned());
            rows.push(r);
        }
        for v in &other.basis {
            let mut r = v.clone();
            r.extend(core::iter::repeat_n(field.zero(), n));
            rows.push(r);
        }
        let (reduced, pivots) = rref_rows(field, 2 * n, rows);
        let mut basis = Vec::new();
        let mut inner = Vec::new();
        for (row, p) in reduced.into_iter().zip(pivots) {
            if p >= n {
                basis.push(row[n..].to_vec());
                inner.push(p - n);
            }
        }
        // the trailing block of an RREF matrix is itself in RREF
        Ok(Subspace {
            ambient: n,
            basis,
            pivots: inner,
        })
    }

    /// A complement of `self` inside `outer`, chosen canonically: write
    /// `self` in the coordinates of `outer`'s basis, row reduce, and keep the
    /// basis rows of `outer` whose coordinate index is not a pivot.
    pub fn complement_in<F: Field<Elem = E>>(&self, field: &F, outer: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(outer)?;
        let mut coords = Vec::with_capacity(self.dim());
        for v in &self.basis {
            coords.push(outer.coordinates(field, v).ok_or(LinalgError::NotASubspace)?);
        }
        let (_, inner_pivots) = rref_rows(field, outer.dim(), coords);
        let mut taken = vec![false; outer.dim()];
        for p in inner_pivots {
            taken[p] = true;
        }
        let mut basis = Vec::new();
        let mut pivots = Vec::new();
        for (i, row) in outer.basis.iter().enumerate() {
            if !taken[i] {
                basis.push(row.clone());
                pivots.push(outer.pivots[i]);
            }
        }
        // a subset of RREF rows is still in RREF
        Ok(Subspace {
            ambient: self.ambient,
            basis,
            pivots,
        })
    }

    /// The span of all `s (x) t` with `s` in `self`, `t` in `other`, inside the
    /// tensor product of the ambient spaces (`self` major).
    pub fn tensor<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let ambient = self.ambient * other.ambient;
        let mut basis = Vec::with_capacity(self.dim() * other.dim());
        let mut pivots = Vec::with_capacity(self.dim() * other.dim());
        for (a, &pa) in self.basis.iter().zip(&self.pivots) {
            for (b, &pb) in other.basis.iter().zip(&other.pivots) {
                basis.push(tensor_vectors(field, a, b));
                pivots.push(pa * other.ambient + pb);
            }
        }
        // Kronecker products of RREF bases are again in RREF: the pivot of
        // a_i (x) b_j sits at (pa_i, pb_j), where every other product vanishes.
        Subspace { ambient, basis, pivots }
    }
}

/// The Kronecker product of two vectors, `a` major.
pub fn tensor_vectors<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        if field.is_zero(x) {
            out.extend(core::iter::repeat_n(field.zero(), b.len()));
            continue;
        }
        for y in b {
            out.push(if field.is_zero(y) {
                field.zero()
            } else {
                field.mul(x, y)
            });
        }
    }
    out
}
