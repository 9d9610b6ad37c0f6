use super::*;
use crate::action::{ActionSpec, GeneratorSpec};
use crate::families::{crown, d4, kronecker, linear, loop_quiver};
use crate::field::Rationals;
use crate::linalg::Matrix;
use alloc::collections::BTreeMap;
use alloc::vec;
use num_rational::BigRational;

fn graph(n: usize, edges: &[(usize, usize)]) -> Multigraph {
    Multigraph::new(n, edges.iter().copied())
}

fn star(arms: &[usize]) -> Multigraph {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in arms {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    graph(next, &edges)
}

#[test]
fn small_diagrams() {
    use DiagramLabel::*;
    assert_eq!(recognize_component(&graph(1, &[])), Ok(A(1)));
    assert_eq!(recognize_component(&graph(4, &[(0, 1), (1, 2), (2, 3)])), Ok(A(4)));
    assert_eq!(recognize_component(&graph(1, &[(0, 0)])), Ok(ATilde0));
    assert_eq!(recognize_component(&graph(1, &[(0, 0), (0, 0)])), Ok(Other));
    assert_eq!(recognize_component(&graph(2, &[(0, 1), (0, 1)])), Ok(ATilde(1)));
    assert_eq!(recognize_component(&graph(2, &[(0, 1), (0, 1), (0, 1)])), Ok(Other));
    assert_eq!(
        recognize_component(&graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])),
        Ok(ATilde(3))
    );
    assert_eq!(recognize_component(&star(&[1, 1, 1])), Ok(D(4)));
    assert_eq!(recognize_component(&star(&[1, 1, 4])), Ok(D(7)));
    assert_eq!(recognize_component(&star(&[1, 2, 2])), Ok(E6));
    assert_eq!(recognize_component(&star(&[2, 1, 3])), Ok(E7));
    assert_eq!(recognize_component(&star(&[1, 2, 4])), Ok(E8));
    assert_eq!(recognize_component(&star(&[2, 2, 2])), Ok(ETilde6));
    assert_eq!(recognize_component(&star(&[1, 3, 3])), Ok(ETilde7));
    assert_eq!(recognize_component(&star(&[1, 2, 5])), Ok(ETilde8));
    assert_eq!(recognize_component(&star(&[1, 1, 1, 1])), Ok(DTilde(4)));
    assert_eq!(recognize_component(&star(&[1, 1, 1, 1, 1])), Ok(Other));
    assert_eq!(recognize_component(&star(&[2, 2, 3])), Ok(Other));
    assert_eq!(recognize_component(&star(&[1, 1, 2, 1])), Ok(Other));
    // two branch points, two leaves each
    assert_eq!(
        recognize_component(&graph(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)])),
        Ok(DTilde(5))
    );
    assert_eq!(
        recognize_component(&graph(7, &[(0, 1), (0, 2), (0, 3), (3, 6), (6, 4), (6, 5)])),
        Ok(DTilde(6))
    );
    assert_eq!(recognize_component(&graph(2, &[])), Err(ReptypeError::Disconnected));
}

#[test]
fn quiver_classification() {
    let a3 = classify(&linear(3));
    assert_eq!(a3.rep_type, RepType::FiniteType);
    assert_eq!(a3.components, vec![DiagramLabel::A(3)]);
    assert!(a3.finite_implies_tame && a3.is_tame());
    let k = classify(&kronecker());
    assert_eq!(
        (k.rep_type, k.components),
        (RepType::TameType, vec![DiagramLabel::ATilde(1)])
    );
    assert_eq!(classify(&loop_quiver(2)).rep_type, RepType::WildType);
    assert_eq!(classify(&loop_quiver(1)).components, vec![DiagramLabel::ATilde0]);
    assert_eq!(classify(&crown(5)).components, vec![DiagramLabel::ATilde(4)]);
    assert_eq!(classify(&d4()).components, vec![DiagramLabel::D(4)]);
    let two = Quiver::new(["a", "b", "c"]).unwrap().with_arrow("a", "b", 1).unwrap();
    let c = classify(&two);
    assert_eq!(c.components, vec![DiagramLabel::A(2), DiagramLabel::A(1)]);
    assert_eq!(c.rep_type, RepType::FiniteType);
}

#[test]
fn labels_display() {
    assert_eq!(DiagramLabel::ATilde0.to_string(), "Ã0");
    assert_eq!(DiagramLabel::DTilde(5).to_string(), "D̃5");
    assert_eq!(DiagramLabel::ETilde8.to_string(), "Ẽ8");
    assert_eq!(DiagramLabel::A(3).to_string(), "A3");
    assert_eq!(RepType::TameType.to_string(), "tame");
}

fn kronecker_outcome(diag: [i64; 4]) -> KroneckerOutcome {
    let f = Rationals;
    let quiver = kronecker();
    let e = |n: i64| BigRational::from_integer(n.into());
    let m = Matrix::from_rows(2, vec![vec![e(diag[0]), e(diag[1])], vec![e(diag[2]), e(diag[3])]]).unwrap();
    let spec = ActionSpec::new(vec![GeneratorSpec {
        name: "g".into(),
        matrices: BTreeMap::from([((0, 1), m)]),
    }]);
    let group = ActingGroup::close(&f, &quiver, &spec).unwrap();
    kronecker_invariants(&quiver, &group).unwrap()
}

#[test]
fn kronecker_trichotomy() {
    assert_eq!(kronecker_outcome([1, 0, 0, 1]), KroneckerOutcome::KroneckerAgain);
    assert_eq!(kronecker_outcome([1, 0, 0, -1]), KroneckerOutcome::A2);
    assert_eq!(kronecker_outcome([-1, 0, 0, -1]), KroneckerOutcome::TwoVertices);
    assert_eq!(KroneckerOutcome::A2.diagram(), vec![DiagramLabel::A(2)]);
}

#[test]
fn kronecker_shape_is_checked() {
    let f = Rationals;
    for quiver in [linear(2), loop_quiver(2), linear(3)] {
        let group = ActingGroup::close(&f, &quiver, &ActionSpec::trivial()).unwrap();
        assert!(matches!(
            kronecker_invariants(&quiver, &group),
            Err(Error::Reptype(ReptypeError::WrongShape(_)))
        ));
    }
}
