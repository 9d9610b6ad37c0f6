use alloc::vec::Vec;
use core::fmt;

use crate::field::Field;
use crate::linalg::Subspace;
use crate::quiver::Path;

use super::{EngineError, ProfileTable};

/// An ordered composition of a path's degree into blocks, listed from the
/// source end of the path.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    pub parts: Vec<usize>,
}

impl Composition {
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The sub-paths cut out by the blocks, source end first.
    pub fn blocks(&self, path: &Path) -> Vec<Path> {
        let mut start = 0;
        self.parts
            .iter()
            .map(|&len| {
                let b = path.slice(start, start + len);
                start += len;
                b
            })
            .collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All `2^(n-1)` compositions of `n >= 1`, in lexicographic order.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn go(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition { parts: prefix.clone() });
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            go(rest - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, &mut Vec::new(), &mut out);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PsiWitness {
    /// `dim F` differs from the sum over compositions of products of
    /// irreducible dimensions.
    DimensionMismatch { fixed: usize, predicted: u128 },
    /// The tensor of irreducibles along this composition leaves `F`.
    NotContained { composition: Composition },
    /// This composition's summand meets the sum of the earlier ones.
    NotDirect { composition: Composition },
    /// The summands together span less than `F`.
    SpanDeficit { fixed: usize, spanned: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PsiVerdict {
    Holds,
    Fails(PsiWitness),
}

impl PsiVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, PsiVerdict::Holds)
    }
}

/// Checks that the tensors of irreducible invariants along all compositions
/// of `path` decompose `F_path` as a direct sum, both by dimension count and
/// by explicit span.
pub fn verify_psi<F: Field>(table: &ProfileTable<F>, path: &Path) -> Result<PsiVerdict, EngineError> {
    let field = table.field();
    let n = path.degree();
    let irr = |p: &Path| {
        table
            .irreducible(p)
            .ok_or_else(|| EngineError::MissingSubPath(p.vertices().to_vec()))
    };
    let fixed = table
        .fixed(path)
        .ok_or_else(|| EngineError::MissingSubPath(path.vertices().to_vec()))?;

    // ways[j]: sum over compositions of the first j steps
    let mut ways = alloc::vec![0u128; n + 1];
    ways[0] = 1;
    for j in 1..=n {
        for i in 0..j {
            if ways[i] > 0 {
                ways[j] += ways[i] * irr(&path.slice(i, j))?.dim() as u128;
            }
        }
    }
    if ways[n] != fixed.dim() as u128 {
        return Ok(PsiVerdict::Fails(PsiWitness::DimensionMismatch {
            fixed: fixed.dim(),
            predicted: ways[n],
        }));
    }

    let mut chains = Vec::new();
    collect_chains(table, path, 0, &mut Vec::new(), None, &mut chains)?;
    let mut acc = Subspace::zero(fixed.ambient_dim());
    for (composition, chain) in chains {
        if !chain.is_subspace_of(field, fixed) {
            return Ok(PsiVerdict::Fails(PsiWitness::NotContained { composition }));
        }
        let next = acc.sum(field, &chain).expect("same ambient");
        if next.dim() != acc.dim() + chain.dim() {
            return Ok(PsiVerdict::Fails(PsiWitness::NotDirect { composition }));
        }
        acc = next;
    }
    if acc != *fixed {
        return Ok(PsiVerdict::Fails(PsiWitness::SpanDeficit {
            fixed: fixed.dim(),
            spanned: acc.dim(),
        }));
    }
    Ok(PsiVerdict::Holds)
}

type Chain<E> = (Composition, Subspace<E>);

/// Tensor chains `I_{b_l} (x) ... (x) I_{b_1}` for every composition whose
/// blocks all carry irreducible invariants.
fn collect_chains<F: Field>(
    table: &ProfileTable<F>,
    path: &Path,
    start: usize,
    parts: &mut Vec<usize>,
    acc: Option<&Subspace<F::Elem>>,
    out: &mut Vec<Chain<F::Elem>>,
) -> Result<(), EngineError> {
    let n = path.degree();
    if start == n {
        out.push((Composition { parts: parts.clone() }, acc.expect("n >= 1").clone()));
        return Ok(());
    }
    for end in start + 1..=n {
        let block = path.slice(start, end);
        let irr = table
            .irreducible(&block)
            .ok_or_else(|| EngineError::MissingSubPath(block.vertices().to_vec()))?;
        if irr.is_zero() {
            continue;
        }
        let next = match acc {
            None => irr.clone(),
            Some(a) => irr.tensor(table.field(), a),
        };
        parts.push(end - start);
        collect_chains(table, path, end, parts, Some(&next), out)?;
        parts.pop();
    }
    Ok(())
}
