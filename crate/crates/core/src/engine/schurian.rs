//! Character arithmetic for Schurian-generated quivers, where every arrow
//! space is a line and each group element acts on it by a scalar.
//!
//! Nothing here touches the linear algebra of the general engine, so the two
//! can be checked against each other.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::action::CharacterTable;
use crate::field::Field;
use crate::quiver::{Path, Quiver, QuiverError, VertexId};
use crate::Error;

/// Invariant, and no proper nonempty initial segment is invariant.
pub fn is_irreducible_invariant<F: Field>(chars: &CharacterTable<F>, path: &Path) -> bool {
    path.degree() >= 1 && (1..path.degree()).all(|i| !chars.is_invariant(&path.slice(0, i))) && chars.is_invariant(path)
}

/// All irreducible invariant paths of degree `1..=max_degree`, grouped by
/// `(source, target)`, each list ordered by degree then lexicographically.
///
/// A depth-first search from every vertex, cut off as soon as the current
/// path is invariant.
pub fn schurian_generators<F: Field>(
    quiver: &Quiver,
    chars: &CharacterTable<F>,
    max_degree: usize,
    cap: usize,
) -> Result<BTreeMap<(VertexId, VertexId), Vec<Path>>, Error> {
    let mut found: BTreeMap<(VertexId, VertexId), Vec<Path>> = BTreeMap::new();
    let field = chars.field();
    for x in 0..quiver.vertex_count() {
        let mut explored = 0usize;
        let one: Vec<F::Elem> = (0..chars.element_count()).map(|_| field.one()).collect();
        let mut stack = alloc::vec![(alloc::vec![x], one)];
        while let Some((vertices, character)) = stack.pop() {
            if vertices.len() > max_degree {
                continue;
            }
            let last = *vertices.last().expect("nonempty");
            for t in quiver.successors(last) {
                explored += 1;
                if explored > cap {
                    return Err(QuiverError::PathCapExceeded {
                        from: quiver.label(x).into(),
                        to: quiver.label(t).into(),
                        cap,
                    }
                    .into());
                }
                let step: Vec<F::Elem> = (0..chars.element_count())
                    .map(|g| field.mul(&character[g], chars.value(g, last, t)))
                    .collect();
                let mut next = vertices.clone();
                next.push(t);
                if chars.is_trivial(&step) {
                    found.entry((x, t)).or_default().push(Path::new(next));
                } else {
                    stack.push((next, step));
                }
            }
        }
    }
    for list in found.values_mut() {
        list.sort();
    }
    Ok(found)
}

/// Number of ways to write `path` as a concatenation of irreducible
/// invariant paths.
pub fn count_factorizations<F: Field>(chars: &CharacterTable<F>, path: &Path) -> u128 {
    let n = path.degree();
    // irreducible_end[i]: the unique j with path[i..j] irreducible invariant
    let mut irreducible_end: Vec<Option<usize>> = alloc::vec![None; n];
    for (i, slot) in irreducible_end.iter_mut().enumerate() {
        *slot = (i + 1..=n).find(|&j| chars.is_invariant(&path.slice(i, j)));
    }
    let mut ways = alloc::vec![0u128; n + 1];
    ways[0] = 1;
    for i in 0..n {
        if ways[i] == 0 {
            continue;
        }
        if let Some(j) = irreducible_end[i] {
            ways[j] += ways[i];
        }
    }
    ways[n]
}

/// Every invariant path of degree `1..=max_degree` factors in exactly one
/// way and every other path in none. Returns the first offending path.
pub fn verify_unique_factorization<F: Field>(
    quiver: &Quiver,
    chars: &CharacterTable<F>,
    max_degree: usize,
    cap: usize,
) -> Result<Option<Path>, Error> {
    for wave in quiver.paths_by_degree(max_degree, cap)? {
        for path in wave {
            let expected = u128::from(chars.is_invariant(&path));
            if count_factorizations(chars, &path) != expected {
                return Ok(Some(path));
            }
        }
    }
    Ok(None)
}
