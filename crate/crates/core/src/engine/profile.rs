use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::action::ActingGroup;
use crate::field::Field;
use crate::linalg::Subspace;
use crate::quiver::{Path, Quiver, VertexId};
use crate::Error;

use super::{composite_subspace, fixed_subspace, irreducible_complement, StringInvariants};

/// Invariants of every path of degree `1..=max_degree`, keyed by vertex
/// sequence. Every contiguous sub-path of a stored path is stored too.
#[derive(Clone, Debug)]
pub struct ProfileTable<F: Field> {
    field: F,
    group_order: usize,
    max_degree: usize,
    vertex_count: usize,
    by_degree: Vec<Vec<Path>>,
    entries: BTreeMap<Path, StringInvariants<F::Elem>>,
}

impl<F: Field> ProfileTable<F> {
    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn get(&self, path: &Path) -> Option<&StringInvariants<F::Elem>> {
        self.entries.get(path)
    }

    pub fn fixed(&self, path: &Path) -> Option<&Subspace<F::Elem>> {
        self.entries.get(path).map(|s| &s.fixed)
    }

    pub fn irreducible(&self, path: &Path) -> Option<&Subspace<F::Elem>> {
        self.entries.get(path).map(|s| &s.irreducible)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Paths of degree `d`, in lexicographic order.
    pub fn paths_of_degree(&self, d: usize) -> &[Path] {
        if d == 0 {
            return &[];
        }
        self.by_degree.get(d - 1).map_or(&[], Vec::as_slice)
    }

    /// All entries, by degree and then lexicographically.
    pub fn iter(&self) -> impl Iterator<Item = &StringInvariants<F::Elem>> {
        self.by_degree.iter().flatten().map(move |p| &self.entries[p])
    }

    #[cfg(test)]
    pub(crate) fn tamper_irreducible(&mut self, path: &Path, irreducible: Subspace<F::Elem>) {
        self.entries.get_mut(path).expect("stored path").irreducible = irreducible;
    }

    /// `sum dim F_g` over the paths `x -> y` of each degree `0..=max_degree`;
    /// the trivial path contributes 1 in degree 0.
    pub fn invariant_series(&self, x: VertexId, y: VertexId) -> Vec<u64> {
        let mut series = alloc::vec![0u64; self.max_degree + 1];
        if x == y {
            series[0] = 1;
        }
        for (d, wave) in self.by_degree.iter().enumerate() {
            for p in wave.iter().filter(|p| p.source() == x && p.target() == y) {
                series[d + 1] += self.entries[p].fixed.dim() as u64;
            }
        }
        series
    }
}

/// Computes invariants in degree waves: degree 1 first, then each path of
/// degree `d` from the already stored fixed spaces of its sub-paths.
pub fn compute_profiles<F: Field>(
    quiver: &Quiver,
    group: &ActingGroup<F>,
    max_degree: usize,
    path_cap: usize,
) -> Result<ProfileTable<F>, Error> {
    let field = group.field();
    let by_degree = quiver.paths_by_degree(max_degree, path_cap)?;
    let mut entries: BTreeMap<Path, StringInvariants<F::Elem>> = BTreeMap::new();
    for wave in &by_degree {
        let mut computed = Vec::with_capacity(wave.len());
        for path in wave {
            let fixed = fixed_subspace(group, group.generators(), path)?;
            let composite = composite_subspace(field, path, fixed.ambient_dim(), |p| entries.get(p).map(|s| &s.fixed))?;
            let irreducible = irreducible_complement(field, &fixed, &composite);
            computed.push(StringInvariants {
                path: path.clone(),
                fixed,
                composite,
                irreducible,
            });
        }
        for s in computed {
            entries.insert(s.path.clone(), s);
        }
    }
    Ok(ProfileTable {
        field: field.clone(),
        group_order: group.order(),
        max_degree,
        vertex_count: quiver.vertex_count(),
        by_degree,
        entries,
    })
}
