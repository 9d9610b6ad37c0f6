//! The generator quiver of the invariant category, its completeness, and
//! global checks: freeness of the invariants and, for Schurian-generated
//! quivers, the cleaving decomposition.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::action::{ActingGroup, CharacterTable};
use crate::engine::{verify_psi, ProfileTable, PsiVerdict, PsiWitness};
use crate::field::Field;
use crate::quiver::{Path, Quiver, VertexId};
use crate::Error;

/// A path whose irreducible invariants are nonzero, with their dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub path: Path,
    pub multiplicity: usize,
}

impl Generator {
    pub fn degree(&self) -> usize {
        self.path.degree()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CertificateReason {
    /// No path is longer than the longest path of the quiver.
    Acyclic,
    /// On an oriented crown of length `n` whose character values have
    /// exponent `e`, irreducible invariant paths have degree at most `n * e`.
    CrownBound,
    /// On a Schurian crown every vertex is the source of exactly one
    /// irreducible invariant path; all of them were found.
    CrownUniqueSource,
}

/// A degree beyond which no generator exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeBound {
    Certified { degree: usize, reason: CertificateReason },
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Completeness {
    Certified { reason: CertificateReason },
    Truncated,
}

impl Completeness {
    pub fn is_certified(&self) -> bool {
        matches!(self, Completeness::Certified { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantQuiverReport {
    pub vertex_count: usize,
    /// Ordered by degree, then lexicographically.
    pub generators: Vec<Generator>,
    pub max_degree: usize,
    pub bound: DegreeBound,
    pub completeness: Completeness,
}

impl InvariantQuiverReport {
    pub fn generators_from(&self, v: VertexId) -> impl Iterator<Item = &Generator> {
        self.generators.iter().filter(move |g| g.path.source() == v)
    }

    pub fn generators_into(&self, v: VertexId) -> impl Iterator<Item = &Generator> {
        self.generators.iter().filter(move |g| g.path.target() == v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum ComponentKind {
    Acyclic {
        longest: usize,
    },
    /// Vertices in cycle order.
    Crown {
        cycle: Vec<VertexId>,
        schurian: bool,
    },
    Other,
}

fn component_kinds(quiver: &Quiver) -> Vec<ComponentKind> {
    quiver
        .underlying_multigraph()
        .components()
        .into_iter()
        .map(|comp| component_kind(quiver, &comp))
        .collect()
}

fn component_kind(quiver: &Quiver, comp: &[VertexId]) -> ComponentKind {
    // topological peeling restricted to the component
    let mut indegree: BTreeMap<VertexId, usize> = comp.iter().map(|&v| (v, 0)).collect();
    for &v in comp {
        for t in quiver.successors(v) {
            *indegree.get_mut(&t).expect("successors stay in the component") += 1;
        }
    }
    let mut ready: Vec<VertexId> = comp.iter().copied().filter(|v| indegree[v] == 0).collect();
    let mut longest: BTreeMap<VertexId, usize> = comp.iter().map(|&v| (v, 0)).collect();
    let mut seen = 0;
    while let Some(v) = ready.pop() {
        seen += 1;
        for t in quiver.successors(v) {
            let lv = longest[&v];
            let lt = longest.get_mut(&t).expect("in component");
            *lt = (*lt).max(lv + 1);
            let d = indegree.get_mut(&t).expect("in component");
            *d -= 1;
            if *d == 0 {
                ready.push(t);
            }
        }
    }
    if seen == comp.len() {
        return ComponentKind::Acyclic {
            longest: longest.values().copied().max().unwrap_or(0),
        };
    }
    let out: Vec<Vec<VertexId>> = comp.iter().map(|&v| quiver.successors(v).collect()).collect();
    let in_count = |v: VertexId| comp.iter().filter(|&&u| quiver.dim(v, u) > 0).count();
    if out.iter().all(|s| s.len() == 1) && comp.iter().all(|&v| in_count(v) == 1) {
        let mut cycle = alloc::vec![comp[0]];
        let mut v = quiver.successors(comp[0]).next().expect("one successor");
        while v != comp[0] {
            cycle.push(v);
            v = quiver.successors(v).next().expect("one successor");
        }
        if cycle.len() == comp.len() {
            let schurian = cycle
                .iter()
                .zip(cycle.iter().cycle().skip(1))
                .all(|(&s, &t)| quiver.dim(t, s) == 1);
            return ComponentKind::Crown { cycle, schurian };
        }
    }
    ComponentKind::Other
}

/// Exponent of the group of scalars by which the elements act on the arrows
/// of `cycle`.
fn crown_exponent<F: Field>(group: &ActingGroup<F>, cycle: &[VertexId]) -> u64 {
    let field = group.field();
    let limit = group.order() as u64;
    let mut e = 1u64;
    for (&s, &t) in cycle.iter().zip(cycle.iter().cycle().skip(1)) {
        let idx = group.edge_index(s, t).expect("crown arrow");
        for g in group.elements() {
            let x = g.matrices()[idx].get(0, 0);
            let o = field
                .multiplicative_order(x, limit)
                .expect("element orders divide the group order");
            e = num_integer::lcm(e, o);
        }
    }
    e
}

/// A degree beyond which no generator can occur, when one is known: the
/// longest path on acyclic components and `n * e` on Schurian crowns,
/// maximised over components.
pub fn completeness_bound<F: Field>(quiver: &Quiver, group: &ActingGroup<F>) -> DegreeBound {
    let mut degree = 0;
    let mut reason = CertificateReason::Acyclic;
    for kind in component_kinds(quiver) {
        match kind {
            ComponentKind::Acyclic { longest } => degree = degree.max(longest),
            ComponentKind::Crown { cycle, schurian: true } => {
                let bound = cycle.len() * crown_exponent(group, &cycle) as usize;
                degree = degree.max(bound);
                reason = CertificateReason::CrownBound;
            }
            _ => return DegreeBound::Unknown,
        }
    }
    DegreeBound::Certified { degree, reason }
}

/// One generator per path with nonzero irreducible invariants, and the
/// completeness of the search to the table's degree.
pub fn build_invariant_quiver<F: Field>(
    quiver: &Quiver,
    group: &ActingGroup<F>,
    table: &ProfileTable<F>,
) -> InvariantQuiverReport {
    let generators: Vec<Generator> = table
        .iter()
        .filter(|s| !s.irreducible.is_zero())
        .map(|s| Generator {
            path: s.path.clone(),
            multiplicity: s.irreducible.dim(),
        })
        .collect();
    let max_degree = table.max_degree();
    let bound = completeness_bound(quiver, group);

    let mut completeness = Completeness::Certified {
        reason: CertificateReason::Acyclic,
    };
    let mut reasons = Vec::new();
    for kind in component_kinds(quiver) {
        let ok = match kind {
            ComponentKind::Acyclic { longest } => {
                reasons.push(CertificateReason::Acyclic);
                longest <= max_degree
            }
            ComponentKind::Crown { cycle, schurian: true } => {
                if cycle.len() * crown_exponent(group, &cycle) as usize <= max_degree {
                    reasons.push(CertificateReason::CrownBound);
                    true
                } else if cycle.iter().all(|&v| generators.iter().any(|g| g.path.source() == v)) {
                    reasons.push(CertificateReason::CrownUniqueSource);
                    true
                } else {
                    false
                }
            }
            _ => false,
        };
        if !ok {
            completeness = Completeness::Truncated;
            break;
        }
    }
    if completeness.is_certified() {
        if let Some(&reason) = reasons.iter().max() {
            completeness = Completeness::Certified { reason };
        }
    }
    InvariantQuiverReport {
        vertex_count: quiver.vertex_count(),
        generators,
        max_degree,
        bound,
        completeness,
    }
}

/// The invariant dimension of one hom-pair and degree disagrees with the
/// count of generator concatenations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMismatch {
    pub source: VertexId,
    pub target: VertexId,
    pub degree: usize,
    pub invariant_dim: u64,
    pub free_count: u128,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessVerdict {
    pub verify_depth: usize,
    pub paths_checked: usize,
    pub psi_failure: Option<(Path, PsiWitness)>,
    pub series_mismatch: Option<SeriesMismatch>,
}

impl FreenessVerdict {
    pub fn holds(&self) -> bool {
        self.psi_failure.is_none() && self.series_mismatch.is_none()
    }
}

/// Dimension of the degree-`d` part of `x -> y` in the free category on the
/// report's generators, for `d` in `0..=max_degree`.
pub fn free_series(report: &InvariantQuiverReport, x: VertexId, y: VertexId) -> Vec<u128> {
    let n = report.vertex_count;
    let d_max = report.max_degree;
    // count[d][v]: concatenations x -> v of total degree d
    let mut count = alloc::vec![alloc::vec![0u128; n]; d_max + 1];
    count[0][x] = 1;
    for d in 1..=d_max {
        for g in &report.generators {
            let dg = g.degree();
            if dg <= d {
                let add = count[d - dg][g.path.source()] * g.multiplicity as u128;
                count[d][g.path.target()] += add;
            }
        }
    }
    count.into_iter().map(|row| row[y]).collect()
}

/// Runs the psi check on every path of degree at most `verify_depth`, then
/// compares the invariant dimension series of every hom-pair with that of
/// the free category on the generators, up to the table's degree.
pub fn verify_freeness<F: Field>(
    table: &ProfileTable<F>,
    report: &InvariantQuiverReport,
    verify_depth: usize,
) -> Result<FreenessVerdict, Error> {
    let mut verdict = FreenessVerdict {
        verify_depth,
        paths_checked: 0,
        psi_failure: None,
        series_mismatch: None,
    };
    'outer: for d in 1..=verify_depth.min(table.max_degree()) {
        for path in table.paths_of_degree(d) {
            verdict.paths_checked += 1;
            if let PsiVerdict::Fails(w) = verify_psi(table, path)? {
                verdict.psi_failure = Some((path.clone(), w));
                break 'outer;
            }
        }
    }
    let n = table.vertex_count();
    'pairs: for x in 0..n {
        for y in 0..n {
            let inv = table.invariant_series(x, y);
            let free = free_series(report, x, y);
            for (degree, (&a, &b)) in inv.iter().zip(&free).enumerate() {
                if u128::from(a) != b {
                    verdict.series_mismatch = Some(SeriesMismatch {
                        source: x,
                        target: y,
                        degree,
                        invariant_dim: a,
                        free_count: b,
                    });
                    break 'pairs;
                }
            }
        }
    }
    Ok(verdict)
}

/// Path counts of one hom-pair, per degree `0..=max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CleavingPair {
    pub source: VertexId,
    pub target: VertexId,
    pub invariant: Vec<usize>,
    pub complement: Vec<usize>,
    pub total: Vec<usize>,
}

/// The decomposition of each truncated hom-space into invariant paths and
/// the span `X` of paths with nontrivial character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CleavingWitness {
    pub max_degree: usize,
    pub pairs: Vec<CleavingPair>,
    pub direct_sum: bool,
    pub pairs_composed: usize,
    /// A composable `(first, second)` with one factor invariant, the other
    /// in `X`, whose composite is invariant.
    pub closure_violation: Option<(Path, Path)>,
}

impl CleavingWitness {
    pub fn holds(&self) -> bool {
        self.direct_sum && self.closure_violation.is_none()
    }
}

/// Checks that invariants and `X` split every hom-space up to `max_degree`
/// and that composing with invariants on either side keeps `X` in `X`.
pub fn verify_cleaving_schurian<F: Field>(
    quiver: &Quiver,
    chars: &CharacterTable<F>,
    max_degree: usize,
    cap: usize,
) -> Result<CleavingWitness, Error> {
    let n = quiver.vertex_count();
    let mut paths: Vec<(Path, bool)> = Vec::new();
    for wave in quiver.paths_by_degree(max_degree, cap)? {
        for p in wave {
            let inv = chars.is_invariant(&p);
            paths.push((p, inv));
        }
    }
    let mut counts: BTreeMap<(VertexId, VertexId), CleavingPair> = BTreeMap::new();
    let blank = |source, target| CleavingPair {
        source,
        target,
        invariant: alloc::vec![0; max_degree + 1],
        complement: alloc::vec![0; max_degree + 1],
        total: alloc::vec![0; max_degree + 1],
    };
    for v in 0..n {
        let c = counts.entry((v, v)).or_insert_with(|| blank(v, v));
        c.invariant[0] += 1;
        c.total[0] += 1;
    }
    for (p, inv) in &paths {
        let c = counts
            .entry((p.source(), p.target()))
            .or_insert_with(|| blank(p.source(), p.target()));
        let d = p.degree();
        c.total[d] += 1;
        if *inv {
            c.invariant[d] += 1;
        } else {
            c.complement[d] += 1;
        }
    }
    let pairs: Vec<CleavingPair> = counts.into_values().collect();
    let direct_sum = pairs
        .iter()
        .all(|c| (0..=max_degree).all(|d| c.invariant[d] + c.complement[d] == c.total[d]));

    let mut from: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
    for (i, (p, _)) in paths.iter().enumerate() {
        from.entry(p.source()).or_default().push(i);
    }
    let mut pairs_composed = 0;
    let mut closure_violation = None;
    'outer: for (first, first_inv) in &paths {
        let Some(next) = from.get(&first.target()) else {
            continue;
        };
        for &j in next {
            let (second, second_inv) = &paths[j];
            if first.degree() + second.degree() > max_degree {
                continue;
            }
            if first_inv == second_inv {
                continue;
            }
            pairs_composed += 1;
            let joined = first.then(second).expect("composable");
            if chars.is_invariant(&joined) {
                closure_violation = Some((first.clone(), second.clone()));
                break 'outer;
            }
        }
    }
    Ok(CleavingWitness {
        max_degree,
        pairs,
        direct_sum,
        pairs_composed,
        closure_violation,
    })
}
