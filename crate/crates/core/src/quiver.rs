//! Quivers whose arrows are whole vector spaces, and their paths.
//!
//! A [`Quiver`] records for every ordered pair `(target, source)` the
//! dimension of the arrow space between them. Paths are vertex sequences
//! through nonzero arrow spaces; the tensor space of a path has one factor
//! per step, never a choice of individual basis arrows.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

pub type VertexId = usize;

/// Default bound on the number of paths enumerated for a single hom-pair.
pub const DEFAULT_PATH_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum QuiverError {
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("arrow space {to}<-{from} given twice")]
    DuplicateArrow { from: String, to: String },
    #[error("quiver has an oriented cycle")]
    CyclicQuiver,
    #[error("more than {cap} paths from {from} to {to}; raise the path cap or lower the degree")]
    PathCapExceeded { from: String, to: String, cap: usize },
}

/// A nonzero arrow space of the quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TrackEdge {
    pub source: VertexId,
    pub target: VertexId,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    labels: Vec<String>,
    // dims[target * n + source]
    dims: Vec<usize>,
}

impl Quiver {
    pub fn new<I, S>(labels: I) -> Result<Self, QuiverError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(QuiverError::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        Ok(Quiver {
            labels,
            dims: vec![0; n * n],
        })
    }

    /// Sets the dimension of the arrow space from `source` to `target`.
    pub fn set_arrow(&mut self, source: VertexId, target: VertexId, dim: usize) -> Result<(), QuiverError> {
        self.check(source)?;
        self.check(target)?;
        let n = self.labels.len();
        let slot = &mut self.dims[target * n + source];
        if *slot != 0 {
            return Err(QuiverError::DuplicateArrow {
                from: self.labels[source].clone(),
                to: self.labels[target].clone(),
            });
        }
        *slot = dim;
        Ok(())
    }

    /// Builder form of [`Quiver::set_arrow`] addressing vertices by label.
    pub fn with_arrow(mut self, source: &str, target: &str, dim: usize) -> Result<Self, QuiverError> {
        let (s, t) = (self.vertex(source)?, self.vertex(target)?);
        self.set_arrow(s, t, dim)?;
        Ok(self)
    }

    fn check(&self, v: VertexId) -> Result<(), QuiverError> {
        if v < self.labels.len() {
            Ok(())
        } else {
            Err(QuiverError::UnknownVertex(alloc::format!("#{v}")))
        }
    }

    pub fn vertex(&self, label: &str) -> Result<VertexId, QuiverError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| QuiverError::UnknownVertex(label.into()))
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    /// `dim` of the arrow space from `source` to `target`.
    pub fn dim(&self, target: VertexId, source: VertexId) -> usize {
        self.dims[target * self.labels.len() + source]
    }

    /// Nonzero arrow spaces ordered by `(source, target)`.
    pub fn track_edges(&self) -> Vec<TrackEdge> {
        let n = self.labels.len();
        let mut out = Vec::new();
        for source in 0..n {
            for target in 0..n {
                let dim = self.dim(target, source);
                if dim > 0 {
                    out.push(TrackEdge { source, target, dim });
                }
            }
        }
        out
    }

    pub fn successors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.labels.len()).filter(move |&t| self.dim(t, v) > 0)
    }

    /// Every arrow space has dimension at most one.
    pub fn is_schurian(&self) -> bool {
        self.dims.iter().all(|&d| d <= 1)
    }

    /// Dimension of the tensor space of a path; 1 for a trivial path.
    pub fn path_dim(&self, path: &Path) -> usize {
        path.steps().map(|(s, t)| self.dim(t, s)).product()
    }

    /// Checks that consecutive vertices are joined by nonzero arrow spaces.
    pub fn is_path(&self, vertices: &[VertexId]) -> bool {
        !vertices.is_empty()
            && vertices.iter().all(|&v| v < self.labels.len())
            && vertices.windows(2).all(|w| self.dim(w[1], w[0]) > 0)
    }

    pub fn path_from_labels(&self, labels: &[&str]) -> Result<Path, QuiverError> {
        let ids = labels.iter().map(|l| self.vertex(l)).collect::<Result<Vec<_>, _>>()?;
        if self.is_path(&ids) {
            Ok(Path(ids))
        } else {
            Err(QuiverError::UnknownVertex(labels.join("->")))
        }
    }

    fn topological_order(&self) -> Option<Vec<VertexId>> {
        let n = self.labels.len();
        let mut indegree: Vec<usize> = (0..n).map(|t| (0..n).filter(|&s| self.dim(t, s) > 0).count()).collect();
        let mut ready: Vec<VertexId> = (0..n).rev().filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop() {
            order.push(v);
            for t in self.successors(v) {
                indegree[t] -= 1;
                if indegree[t] == 0 {
                    ready.push(t);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Degree of the longest path; only defined for acyclic quivers.
    pub fn longest_path_degree(&self) -> Result<usize, QuiverError> {
        let order = self.topological_order().ok_or(QuiverError::CyclicQuiver)?;
        let mut longest = vec![0usize; self.labels.len()];
        for v in order {
            for t in self.successors(v) {
                longest[t] = longest[t].max(longest[v] + 1);
            }
        }
        Ok(longest.into_iter().max().unwrap_or(0))
    }

    fn path_cap_error(&self, x: VertexId, y: VertexId, cap: usize) -> QuiverError {
        QuiverError::PathCapExceeded {
            from: self.labels[x].clone(),
            to: self.labels[y].clone(),
            cap,
        }
    }

    /// All paths from `x` to `y` of degree at most `max_degree`, ordered by
    /// degree then lexicographically by vertex sequence. The trivial path is
    /// included when `x == y`.
    pub fn enumerate_paths(
        &self,
        x: VertexId,
        y: VertexId,
        max_degree: usize,
        cap: usize,
    ) -> Result<Vec<Path>, QuiverError> {
        self.check(x)?;
        self.check(y)?;
        let n = self.labels.len();
        // reach[r][v]: v reaches y by a path of degree at most r
        let mut reach = vec![vec![false; n]];
        reach[0][y] = true;
        for r in 1..=max_degree {
            let prev = &reach[r - 1];
            let cur: Vec<bool> = (0..n).map(|v| prev[v] || self.successors(v).any(|t| prev[t])).collect();
            reach.push(cur);
        }
        let mut out = Vec::new();
        if !reach[max_degree][x] {
            return Ok(out);
        }
        if x == y {
            out.push(Path(vec![x]));
        }
        let mut frontier = vec![Path(vec![x])];
        for d in 1..=max_degree {
            let mut next = Vec::new();
            for p in &frontier {
                for t in self.successors(p.target()) {
                    if reach[max_degree - d][t] {
                        next.push(p.extended(t));
                    }
                }
            }
            if next.len() > cap {
                return Err(self.path_cap_error(x, y, cap));
            }
            out.extend(next.iter().filter(|p| p.target() == y).cloned());
            if out.len() > cap {
                return Err(self.path_cap_error(x, y, cap));
            }
            frontier = next;
        }
        Ok(out)
    }

    /// All paths of degree 1..=max_degree, grouped by degree (index 0 holds
    /// degree 1), each group in lexicographic order.
    pub fn paths_by_degree(&self, max_degree: usize, cap: usize) -> Result<Vec<Vec<Path>>, QuiverError> {
        let n = self.labels.len();
        let mut per_pair: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
        let mut waves: Vec<Vec<Path>> = Vec::new();
        let mut frontier: Vec<Path> = (0..n).map(|v| Path(vec![v])).collect();
        for _ in 1..=max_degree {
            let mut next = Vec::new();
            for p in &frontier {
                for t in self.successors(p.target()) {
                    let q = p.extended(t);
                    let count = per_pair.entry((q.source(), t)).or_default();
                    *count += 1;
                    if *count > cap {
                        return Err(self.path_cap_error(q.source(), t, cap));
                    }
                    next.push(q);
                }
            }
            if next.is_empty() {
                break;
            }
            waves.push(next.clone());
            frontier = next;
        }
        Ok(waves)
    }

    /// One undirected edge per dimension of each arrow space; arrow spaces
    /// at a single vertex become loops.
    pub fn underlying_multigraph(&self) -> Multigraph {
        let mut edges = Vec::new();
        for e in self.track_edges() {
            let (a, b) = if e.source <= e.target {
                (e.source, e.target)
            } else {
                (e.target, e.source)
            };
            edges.extend(core::iter::repeat_n((a, b), e.dim));
        }
        edges.sort_unstable();
        Multigraph {
            vertex_count: self.labels.len(),
            edges,
        }
    }
}

/// A path as its vertex sequence `(u_0, ..., u_n)`, source first.
///
/// Ordered by degree, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path(Vec<VertexId>);

impl Path {
    pub fn new(vertices: Vec<VertexId>) -> Self {
        assert!(!vertices.is_empty(), "a path visits at least one vertex");
        Path(vertices)
    }

    pub fn trivial(v: VertexId) -> Self {
        Path(vec![v])
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn source(&self) -> VertexId {
        self.0[0]
    }

    pub fn target(&self) -> VertexId {
        self.0[self.0.len() - 1]
    }

    /// Steps `(source, target)` from the source end.
    pub fn steps(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.0.windows(2).map(|w| (w[0], w[1]))
    }

    /// The sub-path covering steps `from..to` (step `i` joins `u_i` to `u_{i+1}`).
    pub fn slice(&self, from: usize, to: usize) -> Path {
        Path(self.0[from..=to].to_vec())
    }

    /// The composite `self` followed by `then`; targets and sources must meet.
    pub fn then(&self, then: &Path) -> Option<Path> {
        (self.target() == then.source()).then(|| {
            let mut v = self.0.clone();
            v.extend_from_slice(&then.0[1..]);
            Path(v)
        })
    }

    fn extended(&self, v: VertexId) -> Path {
        let mut out = self.0.clone();
        out.push(v);
        Path(out)
    }

    pub fn display<'a>(&'a self, quiver: &'a Quiver) -> impl fmt::Display + 'a {
        PathDisplay { path: self, quiver }
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct PathDisplay<'a> {
    path: &'a Path,
    quiver: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.path.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" → ")?;
            }
            f.write_str(self.quiver.label(*v))?;
        }
        Ok(())
    }
}

/// An undirected multigraph with loops. Edges are stored as `(a, b)` with
/// `a <= b`, repeated once per multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        edges.sort_unstable();
        Multigraph { vertex_count, edges }
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.vertex_count {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// The subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Multigraph {
        let index = |v: usize| vertices.iter().position(|&w| w == v);
        let edges = self.edges.iter().filter_map(|&(a, b)| Some((index(a)?, index(b)?)));
        Multigraph::new(vertices.len(), edges)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }
}
