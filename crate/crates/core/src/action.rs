//! Homogeneous group actions: one invertible matrix per arrow space for each
//! generator, trivial on vertices, extended diagonally to path spaces.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::field::Field;
use crate::linalg::Matrix;
use crate::quiver::{Path, Quiver, TrackEdge, VertexId};

pub const DEFAULT_GROUP_CAP: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ActionError {
    #[error("generator {generator:?} has no matrix for arrow space {arrow}")]
    MissingMatrix { generator: String, arrow: String },
    #[error("generator {generator:?} gives a matrix for {arrow}, which is not an arrow space of the quiver")]
    UnexpectedMatrix { generator: String, arrow: String },
    #[error("generator {generator:?}: matrix for {arrow} is {rows}x{cols}, arrow space has dimension {dim}")]
    ShapeMismatch {
        generator: String,
        arrow: String,
        dim: usize,
        rows: usize,
        cols: usize,
    },
    #[error("generator {generator:?} is not invertible on {arrow}")]
    NonInvertibleGenerator { generator: String, arrow: String },
    #[error("group closure exceeds {cap} elements; the action may not be finite, or raise the group cap")]
    ClosureCapExceeded { cap: usize },
    #[error("quiver is not Schurian-generated: arrow space {arrow} has dimension {dim}")]
    NotSchurian { arrow: String, dim: usize },
}

/// One generator of the acting group: a matrix on every arrow space, keyed
/// by `(source, target)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpec<E> {
    pub name: String,
    pub matrices: BTreeMap<(VertexId, VertexId), Matrix<E>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionSpec<E> {
    pub generators: Vec<GeneratorSpec<E>>,
    pub group_cap: usize,
}

impl<E> ActionSpec<E> {
    pub fn new(generators: Vec<GeneratorSpec<E>>) -> Self {
        ActionSpec {
            generators,
            group_cap: DEFAULT_GROUP_CAP,
        }
    }

    pub fn trivial() -> Self {
        Self::new(Vec::new())
    }
}

/// A group element as its tuple of matrices, aligned with
/// [`Quiver::track_edges`]. Tuples multiply componentwise.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement<E> {
    matrices: Vec<Matrix<E>>,
}

impl<E: Clone> GroupElement<E> {
    pub fn identity<F: Field<Elem = E>>(field: &F, edges: &[TrackEdge]) -> Self {
        GroupElement {
            matrices: edges.iter().map(|e| Matrix::identity(field, e.dim)).collect(),
        }
    }

    pub fn matrices(&self) -> &[Matrix<E>] {
        &self.matrices
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, rhs: &Self) -> Self {
        GroupElement {
            matrices: self
                .matrices
                .iter()
                .zip(&rhs.matrices)
                .map(|(a, b)| a.mul(field, b).expect("tuples share shapes"))
                .collect(),
        }
    }

    pub fn is_identity<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.matrices.iter().all(|m| m.is_identity(field))
    }
}

pub(crate) fn arrow_name(quiver: &Quiver, source: VertexId, target: VertexId) -> String {
    format!("{}<-{}", quiver.label(target), quiver.label(source))
}

/// The image of the acting group: all distinct matrix tuples, in
/// breadth-first order from the identity.
#[derive(Clone, Debug)]
pub struct ActingGroup<F: Field> {
    field: F,
    edges: Vec<TrackEdge>,
    edge_index: BTreeMap<(VertexId, VertexId), usize>,
    generators: Vec<GroupElement<F::Elem>>,
    elements: Vec<GroupElement<F::Elem>>,
}

impl<F: Field> ActingGroup<F> {
    /// Validates the generator tuples and closes them under multiplication.
    pub fn close(field: &F, quiver: &Quiver, spec: &ActionSpec<F::Elem>) -> Result<Self, ActionError> {
        let edges = quiver.track_edges();
        let edge_index: BTreeMap<_, _> = edges
            .iter()
            .enumerate()
            .map(|(i, e)| ((e.source, e.target), i))
            .collect();
        let mut generators = Vec::with_capacity(spec.generators.len());
        for g in &spec.generators {
            for &(s, t) in g.matrices.keys() {
                if !edge_index.contains_key(&(s, t)) {
                    let arrow = if s < quiver.vertex_count() && t < quiver.vertex_count() {
                        arrow_name(quiver, s, t)
                    } else {
                        format!("#{t}<-#{s}")
                    };
                    return Err(ActionError::UnexpectedMatrix {
                        generator: g.name.clone(),
                        arrow,
                    });
                }
            }
            let mut matrices = Vec::with_capacity(edges.len());
            for e in &edges {
                let arrow = || arrow_name(quiver, e.source, e.target);
                let m = g
                    .matrices
                    .get(&(e.source, e.target))
                    .ok_or_else(|| ActionError::MissingMatrix {
                        generator: g.name.clone(),
                        arrow: arrow(),
                    })?;
                if m.rows() != e.dim || m.cols() != e.dim {
                    return Err(ActionError::ShapeMismatch {
                        generator: g.name.clone(),
                        arrow: arrow(),
                        dim: e.dim,
                        rows: m.rows(),
                        cols: m.cols(),
                    });
                }
                if m.rank(field) < e.dim {
                    return Err(ActionError::NonInvertibleGenerator {
                        generator: g.name.clone(),
                        arrow: arrow(),
                    });
                }
                matrices.push(m.clone());
            }
            generators.push(GroupElement { matrices });
        }

        let identity = GroupElement::identity(field, &edges);
        let mut seen = BTreeSet::new();
        seen.insert(identity.clone());
        let mut elements = alloc::vec![identity.clone()];
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = x.mul(field, g);
                if seen.contains(&y) {
                    continue;
                }
                if elements.len() == spec.group_cap {
                    return Err(ActionError::ClosureCapExceeded { cap: spec.group_cap });
                }
                seen.insert(y.clone());
                elements.push(y.clone());
                queue.push_back(y);
            }
        }
        Ok(ActingGroup {
            field: field.clone(),
            edges,
            edge_index,
            generators,
            elements,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn edges(&self) -> &[TrackEdge] {
        &self.edges
    }

    pub fn edge_index(&self, source: VertexId, target: VertexId) -> Option<usize> {
        self.edge_index.get(&(source, target)).copied()
    }

    /// Every element of the group image, identity first.
    pub fn elements(&self) -> &[GroupElement<F::Elem>] {
        &self.elements
    }

    /// The generator tuples in input order. They have the same common fixed
    /// points as the whole group.
    pub fn generators(&self) -> &[GroupElement<F::Elem>] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Dimension of the tensor space of `path`.
    pub fn path_dim(&self, path: &Path) -> usize {
        path.steps()
            .map(|(s, t)| self.edges[self.edge_index(s, t).expect("path follows arrow spaces")].dim)
            .product()
    }

    /// Diagonal action of `g` on the tensor space of `path`: the Kronecker
    /// product of the step matrices, last step leftmost. A trivial path gets
    /// the 1x1 identity.
    pub fn act_on_path(&self, g: &GroupElement<F::Elem>, path: &Path) -> Matrix<F::Elem> {
        let mut acc = Matrix::identity(&self.field, 1);
        for (s, t) in path.steps() {
            let idx = self.edge_index(s, t).expect("path follows arrow spaces");
            acc = g.matrices[idx].tensor(&self.field, &acc);
        }
        acc
    }

    /// Characters of a Schurian-generated action: `values[element][edge]`.
    pub fn characters(&self, quiver: &Quiver) -> Result<CharacterTable<F>, ActionError> {
        if let Some(e) = self.edges.iter().find(|e| e.dim > 1) {
            return Err(ActionError::NotSchurian {
                arrow: arrow_name(quiver, e.source, e.target),
                dim: e.dim,
            });
        }
        let values = self
            .elements
            .iter()
            .map(|g| g.matrices.iter().map(|m| m.get(0, 0).clone()).collect())
            .collect();
        Ok(CharacterTable {
            field: self.field.clone(),
            edge_index: self.edge_index.clone(),
            values,
        })
    }
}

/// The scalar by which each group element acts on each one-dimensional
/// arrow space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable<F: Field> {
    field: F,
    edge_index: BTreeMap<(VertexId, VertexId), usize>,
    values: Vec<Vec<F::Elem>>,
}

impl<F: Field> CharacterTable<F> {
    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn element_count(&self) -> usize {
        self.values.len()
    }

    /// `chi_a(g)` for the arrow `a = source -> target` and element index `g`.
    pub fn value(&self, element: usize, source: VertexId, target: VertexId) -> &F::Elem {
        &self.values[element][self.edge_index[&(source, target)]]
    }

    /// The character of a path, as its values on every element.
    pub fn path_character(&self, path: &Path) -> Vec<F::Elem> {
        let mut acc: Vec<F::Elem> = (0..self.values.len()).map(|_| self.field.one()).collect();
        for (s, t) in path.steps() {
            let idx = self.edge_index[&(s, t)];
            for (a, row) in acc.iter_mut().zip(&self.values) {
                *a = self.field.mul(a, &row[idx]);
            }
        }
        acc
    }

    pub fn is_trivial(&self, character: &[F::Elem]) -> bool {
        character.iter().all(|x| self.field.is_one(x))
    }

    pub fn is_invariant(&self, path: &Path) -> bool {
        self.is_trivial(&self.path_character(path))
    }

    /// Least `e >= 1` with `chi^e` trivial, searched up to `limit`.
    pub fn character_order(&self, character: &[F::Elem], limit: u64) -> Option<u64> {
        let mut lcm = 1u64;
        for x in character {
            let o = self.field.multiplicative_order(x, limit)?;
            lcm = num_integer::lcm(lcm, o);
        }
        (lcm <= limit).then_some(lcm)
    }

    /// Multiplies two characters pointwise.
    pub fn product(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.field.mul(x, y)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{CyclotomicField, Rationals};
    use alloc::vec;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn crown(n: usize) -> Quiver {
        let mut quiver = Quiver::new((0..n).map(|i| format!("t{i}"))).unwrap();
        for i in 0..n {
            quiver.set_arrow(i, (i + 1) % n, 1).unwrap();
        }
        quiver
    }

    fn scalar_everywhere<E: Clone>(quiver: &Quiver, name: &str, x: E) -> GeneratorSpec<E> {
        GeneratorSpec {
            name: name.into(),
            matrices: quiver
                .track_edges()
                .iter()
                .map(|e| ((e.source, e.target), Matrix::from_vec(1, 1, vec![x.clone()]).unwrap()))
                .collect(),
        }
    }

    #[test]
    fn crown_closure_has_order_n() {
        let f = CyclotomicField::new(3).unwrap();
        let quiver = crown(3);
        let z = f.primitive_root().unwrap();
        let spec = ActionSpec::new(vec![scalar_everywhere(&quiver, "t", z.clone())]);
        let group = ActingGroup::close(&f, &quiver, &spec).unwrap();
        assert_eq!(group.order(), 3);
        let chars = group.characters(&quiver).unwrap();
        // element 1 in BFS order is the generator itself
        for i in 0..3 {
            assert_eq!(chars.value(1, i, (i + 1) % 3), &z);
            assert!(f.is_one(chars.value(0, i, (i + 1) % 3)));
        }
        let g = &group.generators()[0];
        let cycle = Path::new(vec![0, 1, 2, 0]);
        assert!(group.act_on_path(g, &cycle).is_identity(&f));
        assert!(!group.act_on_path(g, &Path::new(vec![0, 1])).is_identity(&f));
    }

    #[test]
    fn empty_generator_list_is_trivial_group() {
        let quiver = crown(2);
        let group = ActingGroup::close(&Rationals, &quiver, &ActionSpec::trivial()).unwrap();
        assert_eq!(group.order(), 1);
        assert!(group.elements()[0].is_identity(&Rationals));
    }

    #[test]
    fn swap_on_a_loop() {
        let quiver = Quiver::new(["x"]).unwrap().with_arrow("x", "x", 2).unwrap();
        let swap = Matrix::from_rows(2, vec![vec![q(0), q(1)], vec![q(1), q(0)]]).unwrap();
        let spec = ActionSpec::new(vec![GeneratorSpec {
            name: "s".into(),
            matrices: BTreeMap::from([((0, 0), swap.clone())]),
        }]);
        let group = ActingGroup::close(&Rationals, &quiver, &spec).unwrap();
        assert_eq!(group.order(), 2);
        let loop1 = Path::new(vec![0, 0]);
        assert_eq!(group.act_on_path(&group.generators()[0], &loop1), swap);
        assert_eq!(
            group.act_on_path(&group.elements()[0], &Path::new(vec![0, 0, 0])),
            Matrix::identity(&Rationals, 4)
        );
        assert_eq!(
            group.characters(&quiver),
            Err(ActionError::NotSchurian {
                arrow: "x<-x".into(),
                dim: 2
            })
        );
    }

    #[test]
    fn validation_errors_name_the_arrow() {
        let quiver = Quiver::new(["x", "y"]).unwrap().with_arrow("x", "y", 2).unwrap();
        let bad_shape = ActionSpec::new(vec![GeneratorSpec {
            name: "g".into(),
            matrices: BTreeMap::from([((0, 1), Matrix::identity(&Rationals, 3))]),
        }]);
        assert_eq!(
            ActingGroup::close(&Rationals, &quiver, &bad_shape).unwrap_err(),
            ActionError::ShapeMismatch {
                generator: "g".into(),
                arrow: "y<-x".into(),
                dim: 2,
                rows: 3,
                cols: 3
            }
        );
        let singular = ActionSpec::new(vec![GeneratorSpec {
            name: "g".into(),
            matrices: BTreeMap::from([((0, 1), Matrix::zeros(&Rationals, 2, 2))]),
        }]);
        assert!(matches!(
            ActingGroup::close(&Rationals, &quiver, &singular),
            Err(ActionError::NonInvertibleGenerator { .. })
        ));
        let missing = ActionSpec::new(vec![GeneratorSpec {
            name: "g".into(),
            matrices: BTreeMap::new(),
        }]);
        assert!(matches!(
            ActingGroup::close(&Rationals, &quiver, &missing),
            Err(ActionError::MissingMatrix { .. })
        ));
        let extra = ActionSpec::new(vec![GeneratorSpec {
            name: "g".into(),
            matrices: BTreeMap::from([
                ((0, 1), Matrix::identity(&Rationals, 2)),
                ((1, 0), Matrix::identity(&Rationals, 2)),
            ]),
        }]);
        assert!(matches!(
            ActingGroup::close(&Rationals, &quiver, &extra),
            Err(ActionError::UnexpectedMatrix { .. })
        ));
    }

    #[test]
    fn infinite_order_hits_the_cap() {
        let quiver = Quiver::new(["x"]).unwrap().with_arrow("x", "x", 1).unwrap();
        let mut spec = ActionSpec::new(vec![GeneratorSpec {
            name: "two".into(),
            matrices: BTreeMap::from([((0, 0), Matrix::from_vec(1, 1, vec![q(2)]).unwrap())]),
        }]);
        spec.group_cap = 50;
        assert_eq!(
            ActingGroup::close(&Rationals, &quiver, &spec).unwrap_err(),
            ActionError::ClosureCapExceeded { cap: 50 }
        );
    }
}
