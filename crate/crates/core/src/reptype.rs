//! Representation type from the underlying graph: finite exactly on
//! disjoint unions of Dynkin diagrams, tame on unions of Dynkin and extended
//! Dynkin diagrams, wild otherwise.

use alloc::vec::Vec;
use core::fmt;

use crate::action::ActingGroup;
use crate::category::InvariantQuiverReport;
use crate::engine::fixed_subspace;
use crate::field::Field;
use crate::quiver::{Multigraph, Path, Quiver};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ReptypeError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("expected two vertices joined by one arrow space of dimension 2: {0}")]
    WrongShape(&'static str),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiagramLabel {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
    /// One vertex with one loop.
    ATilde0,
    ATilde(usize),
    DTilde(usize),
    ETilde6,
    ETilde7,
    ETilde8,
    Other,
}

impl DiagramLabel {
    pub fn is_dynkin(&self) -> bool {
        matches!(self, Self::A(_) | Self::D(_) | Self::E6 | Self::E7 | Self::E8)
    }

    pub fn is_extended_dynkin(&self) -> bool {
        matches!(
            self,
            Self::ATilde0 | Self::ATilde(_) | Self::DTilde(_) | Self::ETilde6 | Self::ETilde7 | Self::ETilde8
        )
    }
}

impl fmt::Display for DiagramLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::A(n) => write!(f, "A{n}"),
            Self::D(n) => write!(f, "D{n}"),
            Self::E6 => f.write_str("E6"),
            Self::E7 => f.write_str("E7"),
            Self::E8 => f.write_str("E8"),
            Self::ATilde0 => f.write_str("Ã0"),
            Self::ATilde(n) => write!(f, "Ã{n}"),
            Self::DTilde(n) => write!(f, "D̃{n}"),
            Self::ETilde6 => f.write_str("Ẽ6"),
            Self::ETilde7 => f.write_str("Ẽ7"),
            Self::ETilde8 => f.write_str("Ẽ8"),
            Self::Other => f.write_str("Other"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RepType {
    FiniteType,
    TameType,
    WildType,
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepType::FiniteType => "finite",
            RepType::TameType => "tame",
            RepType::WildType => "wild",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub rep_type: RepType,
    /// One label per connected component, ordered by least vertex.
    pub components: Vec<DiagramLabel>,
    /// Finite type counts as tame as well.
    pub finite_implies_tame: bool,
}

impl Classification {
    pub fn is_tame(&self) -> bool {
        self.rep_type <= RepType::TameType
    }
}

/// Exact recognition of a connected graph among the Dynkin and extended
/// Dynkin diagrams.
pub fn recognize_component(g: &Multigraph) -> Result<DiagramLabel, ReptypeError> {
    if !g.is_connected() {
        return Err(ReptypeError::Disconnected);
    }
    let n = g.vertex_count;
    let m = g.edges.len();
    if g.edges.iter().any(|&(a, b)| a == b) {
        return Ok(if n == 1 && m == 1 {
            DiagramLabel::ATilde0
        } else {
            DiagramLabel::Other
        });
    }
    if g.edges.windows(2).any(|w| w[0] == w[1]) {
        return Ok(if n == 2 && m == 2 {
            DiagramLabel::ATilde(1)
        } else {
            DiagramLabel::Other
        });
    }
    let degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    if m == n && degree.iter().all(|&d| d == 2) {
        return Ok(DiagramLabel::ATilde(n - 1));
    }
    if m + 1 != n {
        return Ok(DiagramLabel::Other);
    }
    let neighbours = |v: usize| -> Vec<usize> {
        g.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    };
    // vertices on the arm leaving `center` through `first`, up to a leaf
    let arm = |center: usize, first: usize| -> usize {
        let (mut prev, mut cur, mut len) = (center, first, 1);
        while degree[cur] == 2 {
            let next = neighbours(cur).into_iter().find(|&w| w != prev).expect("degree 2");
            prev = cur;
            cur = next;
            len += 1;
        }
        if degree[cur] == 1 {
            len
        } else {
            usize::MAX
        }
    };
    let branch: Vec<usize> = (0..n).filter(|&v| degree[v] >= 3).collect();
    Ok(match branch.as_slice() {
        [] => DiagramLabel::A(n),
        [c] if degree[*c] == 3 => {
            let mut arms: Vec<usize> = neighbours(*c).into_iter().map(|v| arm(*c, v)).collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => DiagramLabel::D(k + 3),
                [1, 2, 2] => DiagramLabel::E6,
                [1, 2, 3] => DiagramLabel::E7,
                [1, 2, 4] => DiagramLabel::E8,
                [2, 2, 2] => DiagramLabel::ETilde6,
                [1, 3, 3] => DiagramLabel::ETilde7,
                [1, 2, 5] => DiagramLabel::ETilde8,
                _ => DiagramLabel::Other,
            }
        }
        [c] if degree[*c] == 4 && n == 5 => DiagramLabel::DTilde(4),
        [c1, c2] if degree[*c1] == 3 && degree[*c2] == 3 => {
            let leaves = |c: usize| neighbours(c).into_iter().filter(|&v| degree[v] == 1).count();
            if leaves(*c1) == 2 && leaves(*c2) == 2 {
                DiagramLabel::DTilde(n - 1)
            } else {
                DiagramLabel::Other
            }
        }
        _ => DiagramLabel::Other,
    })
}

/// Classifies a graph component by component.
pub fn classify_multigraph(g: &Multigraph) -> Classification {
    let components: Vec<DiagramLabel> = g
        .components()
        .iter()
        .map(|c| recognize_component(&g.induced(c)).expect("components are connected"))
        .collect();
    let rep_type = if components.iter().all(DiagramLabel::is_dynkin) {
        RepType::FiniteType
    } else if components.iter().all(|c| c.is_dynkin() || c.is_extended_dynkin()) {
        RepType::TameType
    } else {
        RepType::WildType
    };
    Classification {
        rep_type,
        components,
        finite_implies_tame: true,
    }
}

/// Classification of the underlying graph of `quiver`, one edge per
/// dimension of each arrow space.
pub fn classify(quiver: &Quiver) -> Classification {
    classify_multigraph(&quiver.underlying_multigraph())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantClassification {
    pub classification: Classification,
    /// False when the generator search was truncated: the classification
    /// then describes the truncated quiver only.
    pub certified: bool,
}

/// The graph of the invariant category: one edge per unit of generator
/// multiplicity, between the generator's endpoints.
pub fn invariant_multigraph(report: &InvariantQuiverReport) -> Multigraph {
    let edges = report
        .generators
        .iter()
        .flat_map(|g| core::iter::repeat_n((g.path.source(), g.path.target()), g.multiplicity));
    Multigraph::new(report.vertex_count, edges)
}

pub fn classify_invariants(report: &InvariantQuiverReport) -> InvariantClassification {
    InvariantClassification {
        classification: classify_multigraph(&invariant_multigraph(report)),
        certified: report.completeness.is_certified(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KroneckerOutcome {
    /// Both arrows survive: the invariants form a Kronecker quiver again.
    KroneckerAgain,
    /// One invariant arrow.
    A2,
    /// No invariant arrow.
    TwoVertices,
}

impl KroneckerOutcome {
    pub fn diagram(&self) -> Vec<DiagramLabel> {
        match self {
            Self::KroneckerAgain => alloc::vec![DiagramLabel::ATilde(1)],
            Self::A2 => alloc::vec![DiagramLabel::A(2)],
            Self::TwoVertices => alloc::vec![DiagramLabel::A(1), DiagramLabel::A(1)],
        }
    }
}

impl fmt::Display for KroneckerOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::KroneckerAgain => "KroneckerAgain",
            Self::A2 => "A2",
            Self::TwoVertices => "TwoVertices",
        })
    }
}

/// On the Kronecker quiver all paths have degree at most 1, so the invariant
/// category is decided by the dimension of the fixed arrow space alone.
pub fn kronecker_invariants<F: Field>(quiver: &Quiver, group: &ActingGroup<F>) -> Result<KroneckerOutcome, Error> {
    if quiver.vertex_count() != 2 {
        return Err(ReptypeError::WrongShape("quiver must have two vertices").into());
    }
    let edges = quiver.track_edges();
    let [e] = edges.as_slice() else {
        return Err(ReptypeError::WrongShape("quiver must have exactly one arrow space").into());
    };
    if e.source == e.target || e.dim != 2 {
        return Err(ReptypeError::WrongShape("arrow space must be 2-dimensional between distinct vertices").into());
    }
    let path = Path::new(alloc::vec![e.source, e.target]);
    let fixed = fixed_subspace(group, group.elements(), &path)?;
    Ok(match fixed.dim() {
        2 => KroneckerOutcome::KroneckerAgain,
        1 => KroneckerOutcome::A2,
        _ => KroneckerOutcome::TwoVertices,
    })
}

#[cfg(test)]
mod tests;
