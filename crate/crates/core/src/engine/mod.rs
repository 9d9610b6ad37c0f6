//! Per-path invariants of the diagonal action.
//!
//! For a path `g` of degree `n` with tensor space `V_g`, the engine computes
//! the fixed subspace `F_g`, the composite part
//! `C_g = sum_{0<i<n} F_{g>i} (x) F_{g<=i}` (the part of `g` past the `i`-th
//! vertex is the left, major factor) and a canonical complement `I_g` of
//! `C_g` in `F_g`, the irreducible invariants.

mod profile;
mod psi;
mod schurian;

use alloc::vec::Vec;

use crate::action::{ActingGroup, GroupElement};
use crate::field::Field;
use crate::linalg::{kernel, Matrix, Subspace};
use crate::quiver::{Path, VertexId};

pub use profile::{compute_profiles, ProfileTable};
pub use psi::{compositions, verify_psi, Composition, PsiVerdict, PsiWitness};
pub use schurian::{count_factorizations, is_irreducible_invariant, schurian_generators, verify_unique_factorization};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("sub-path {0:?} missing from the profile table")]
    MissingSubPath(Vec<VertexId>),
    #[error("path of degree 0 has no tensor factors")]
    DegreeZeroPath,
}

/// The three invariant spaces attached to one path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringInvariants<E> {
    pub path: Path,
    pub fixed: Subspace<E>,
    pub composite: Subspace<E>,
    pub irreducible: Subspace<E>,
}

/// `F_g`: the common kernel of `act(g) - 1` over `elements`.
///
/// Passing the generator tuples gives the same space as passing the whole
/// group.
pub fn fixed_subspace<F: Field>(
    group: &ActingGroup<F>,
    elements: &[GroupElement<F::Elem>],
    path: &Path,
) -> Result<Subspace<F::Elem>, EngineError> {
    if path.degree() == 0 {
        return Err(EngineError::DegreeZeroPath);
    }
    let field = group.field();
    let mut stacked: Option<Matrix<F::Elem>> = None;
    let ambient = group.path_dim(path);
    for g in elements {
        let a = group.act_on_path(g, path);
        let shifted = a.sub(field, &Matrix::identity(field, ambient)).expect("square action");
        if shifted.is_zero(field) {
            continue;
        }
        stacked = Some(match stacked {
            None => shifted,
            Some(m) => m.vstack(&shifted).expect("same width"),
        });
    }
    Ok(match stacked {
        Some(m) => kernel(field, &m),
        None => Subspace::full(field, ambient),
    })
}

/// `C_g`, built from the fixed subspaces of the proper sub-paths as returned
/// by `fixed_of`. Zero for degree 1.
pub fn composite_subspace<'a, F: Field>(
    field: &F,
    path: &Path,
    ambient: usize,
    fixed_of: impl Fn(&Path) -> Option<&'a Subspace<F::Elem>>,
) -> Result<Subspace<F::Elem>, EngineError>
where
    F::Elem: 'a,
{
    let n = path.degree();
    let mut vectors = Vec::new();
    for i in 1..n {
        let head = path.slice(i, n);
        let tail = path.slice(0, i);
        let fh = fixed_of(&head).ok_or_else(|| EngineError::MissingSubPath(head.vertices().to_vec()))?;
        let ft = fixed_of(&tail).ok_or_else(|| EngineError::MissingSubPath(tail.vertices().to_vec()))?;
        if fh.is_zero() || ft.is_zero() {
            continue;
        }
        vectors.extend(fh.tensor(field, ft).basis().iter().cloned());
    }
    Ok(Subspace::span(field, ambient, vectors).expect("tensor of sub-path spaces has path dimension"))
}

/// The canonical complement of `composite` inside `fixed`.
pub fn irreducible_complement<F: Field>(
    field: &F,
    fixed: &Subspace<F::Elem>,
    composite: &Subspace<F::Elem>,
) -> Subspace<F::Elem> {
    composite
        .complement_in(field, fixed)
        .expect("composite invariants are invariant")
}
