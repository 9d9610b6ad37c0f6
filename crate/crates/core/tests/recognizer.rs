mod common;

use common::diagrams::{diagram_table, perturb, relabel};
use common::rng;
use common::tits::{definiteness, Definiteness};
use invcat_core::quiver::Multigraph;
use invcat_core::reptype::{classify_multigraph, recognize_component, DiagramLabel, RepType};
use proptest::prelude::*;

fn expected_definiteness(label: DiagramLabel) -> Definiteness {
    if label.is_dynkin() {
        Definiteness::Definite
    } else if label.is_extended_dynkin() {
        Definiteness::Semidefinite
    } else {
        Definiteness::Indefinite
    }
}

#[test]
fn oracle_agrees_with_the_table() {
    for (label, g) in diagram_table(9) {
        assert_eq!(definiteness(&g), expected_definiteness(label), "{label}");
    }
}

#[test]
fn every_small_diagram_is_recognized() {
    let table = diagram_table(9);
    assert_eq!(table.len(), 9 + 6 + 3 + 1 + 8 + 5 + 3);
    let mut r = rng(7);
    for (label, g) in &table {
        for _ in 0..5 {
            assert_eq!(recognize_component(&relabel(g, &mut r)), Ok(*label));
        }
    }
}

#[test]
fn perturbed_extended_diagrams_are_other() {
    let extended: Vec<_> = diagram_table(9)
        .into_iter()
        .filter(|(l, _)| l.is_extended_dynkin())
        .collect();
    let mut r = rng(11);
    for i in 0..200 {
        let g = perturb(&extended[i % extended.len()].1, &mut r);
        assert_eq!(definiteness(&g), Definiteness::Indefinite);
        assert_eq!(recognize_component(&g), Ok(DiagramLabel::Other), "{g:?}");
    }
}

#[test]
fn five_branch_star_is_wild() {
    let (n, edges) = common::diagrams::star_edges(&[1, 1, 1, 1, 1]);
    let g = Multigraph::new(n, edges);
    assert_eq!(recognize_component(&g), Ok(DiagramLabel::Other));
    let two = Multigraph::new(2 * n, g.edges.iter().flat_map(|&(a, b)| [(a, b), (a + n, b + n)]));
    let c = classify_multigraph(&two);
    assert_eq!(c.rep_type, RepType::WildType);
    assert_eq!(c.components.len(), 2);
}

fn connected_multigraph() -> impl Strategy<Value = Multigraph> {
    (1usize..=7)
        .prop_flat_map(|n| {
            // a random spanning tree plus up to three extra edges
            let parents = proptest::collection::vec(any::<prop::sample::Index>(), n.saturating_sub(1));
            let extra = proptest::collection::vec((0..n, 0..n), 0..=3);
            (Just(n), parents, extra)
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, p)| (p.index(i + 1), i + 1))
                .collect();
            edges.extend(extra);
            Multigraph::new(n, edges)
        })
}

proptest! {
    #[test]
    fn recognizer_agrees_with_tits_form(g in connected_multigraph()) {
        let label = recognize_component(&g).unwrap();
        prop_assert_eq!(expected_definiteness(label), definiteness(&g), "{} on {:?}", label, g);
    }
}
