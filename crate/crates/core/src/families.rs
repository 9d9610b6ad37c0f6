//! Small standard quivers and actions.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::action::{ActionSpec, GeneratorSpec};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::quiver::{Quiver, VertexId};

/// `u0 - u1 - ... - u{n-1}`; edge `i` points from `u_i` to `u_{i+1}` when
/// `forward[i]`, the other way otherwise.
pub fn linear_oriented(forward: &[bool]) -> Quiver {
    let n = forward.len() + 1;
    let mut q = Quiver::new((0..n).map(|i| format!("u{i}"))).expect("distinct labels");
    for (i, &f) in forward.iter().enumerate() {
        let (s, t) = if f { (i, i + 1) } else { (i + 1, i) };
        q.set_arrow(s, t, 1).expect("fresh arrow");
    }
    q
}

/// `u0 -> u1 -> ... -> u{n-1}`.
pub fn linear(n: usize) -> Quiver {
    linear_oriented(&vec![true; n.saturating_sub(1)])
}

/// All `2^(n-1)` orientations of the path on `n` vertices.
pub fn linear_orientations(n: usize) -> Vec<Quiver> {
    let edges = n.saturating_sub(1);
    (0..1u32 << edges)
        .map(|mask| {
            let forward: Vec<bool> = (0..edges).map(|i| mask >> i & 1 == 1).collect();
            linear_oriented(&forward)
        })
        .collect()
}

/// The oriented crown `c0 -> c1 -> ... -> c{n-1} -> c0`.
pub fn crown(n: usize) -> Quiver {
    let mut q = Quiver::new((0..n).map(|i| format!("c{i}"))).expect("distinct labels");
    for i in 0..n {
        q.set_arrow(i, (i + 1) % n, 1).expect("fresh arrow");
    }
    q
}

/// Three arms `a, b, c` pointing into the centre `o`.
pub fn d4() -> Quiver {
    let mut q = Quiver::new(["o", "a", "b", "c"]).expect("distinct labels");
    for leaf in 1..4 {
        q.set_arrow(leaf, 0, 1).expect("fresh arrow");
    }
    q
}

/// `x -> y` with a 2-dimensional arrow space.
pub fn kronecker() -> Quiver {
    Quiver::new(["x", "y"])
        .expect("distinct labels")
        .with_arrow("x", "y", 2)
        .expect("fresh arrow")
}

/// One vertex `x` with a loop space of dimension `dim`.
pub fn loop_quiver(dim: usize) -> Quiver {
    Quiver::new(["x"])
        .expect("distinct label")
        .with_arrow("x", "x", dim)
        .expect("fresh arrow")
}

/// A generator acting on every arrow space by the matrix `m_e` chosen by
/// `matrix(source, target, dim)`.
pub fn generator_by<E: Clone>(
    quiver: &Quiver,
    name: &str,
    mut matrix: impl FnMut(VertexId, VertexId, usize) -> Matrix<E>,
) -> GeneratorSpec<E> {
    GeneratorSpec {
        name: name.into(),
        matrices: quiver
            .track_edges()
            .iter()
            .map(|e| ((e.source, e.target), matrix(e.source, e.target, e.dim)))
            .collect(),
    }
}

/// A single generator acting by the scalar `value` on every arrow space.
pub fn scalar_action<F: Field>(field: &F, quiver: &Quiver, value: &F::Elem) -> ActionSpec<F::Elem> {
    ActionSpec::new(vec![generator_by(quiver, "g", |_, _, d| {
        let mut m = Matrix::identity(field, d);
        for i in 0..d {
            m.set(i, i, value.clone());
        }
        m
    })])
}

/// A single generator on a Schurian-generated quiver, acting on the arrow
/// `s -> t` by `values[(s, t)]`; missing arrows are fixed.
pub fn character_action<F: Field>(
    field: &F,
    quiver: &Quiver,
    values: &BTreeMap<(VertexId, VertexId), F::Elem>,
) -> ActionSpec<F::Elem> {
    ActionSpec::new(vec![generator_by(quiver, "g", |s, t, d| {
        assert_eq!(d, 1, "character actions need one-dimensional arrow spaces");
        let x = values.get(&(s, t)).cloned().unwrap_or_else(|| field.one());
        Matrix::from_vec(1, 1, vec![x]).expect("1x1")
    })])
}

/// The coordinate swap on the 2-dimensional loop of [`loop_quiver`].
pub fn swap_action<F: Field>(field: &F) -> ActionSpec<F::Elem> {
    let swap = Matrix::from_rows(
        2,
        vec![vec![field.zero(), field.one()], vec![field.one(), field.zero()]],
    )
    .expect("2x2");
    ActionSpec::new(vec![GeneratorSpec {
        name: "s".into(),
        matrices: BTreeMap::from([((0, 0), swap)]),
    }])
}
