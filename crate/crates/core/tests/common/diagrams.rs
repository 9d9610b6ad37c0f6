//! Every Dynkin and extended Dynkin diagram up to a vertex bound, built from
//! its defining shape.

use invcat_core::quiver::Multigraph;
use invcat_core::reptype::DiagramLabel;
use rand::seq::SliceRandom;
use rand::Rng;

use super::TestRng;

pub fn path_graph(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

/// Arms of the given vertex counts attached to a centre `0`.
pub fn star_edges(arms: &[usize]) -> (usize, Vec<(usize, usize)>) {
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
    (next, edges)
}

/// `D~_n`: a path of `n - 3` vertices with two leaves at each end.
fn d_tilde(n: usize) -> (usize, Vec<(usize, usize)>) {
    if n == 4 {
        return star_edges(&[1, 1, 1, 1]);
    }
    let spine = n - 3;
    let mut edges = path_graph(spine);
    let mut next = spine;
    for end in [0, spine - 1] {
        for _ in 0..2 {
            edges.push((end, next));
            next += 1;
        }
    }
    (next, edges)
}

pub fn diagram_table(max_vertices: usize) -> Vec<(DiagramLabel, Multigraph)> {
    use DiagramLabel::*;
    let mut out = Vec::new();
    let mut push = |label, (n, edges): (usize, Vec<(usize, usize)>)| {
        if n <= max_vertices {
            out.push((label, Multigraph::new(n, edges)));
        }
    };
    for n in 1..=max_vertices {
        push(A(n), (n, path_graph(n)));
    }
    for n in 4..=max_vertices {
        push(D(n), star_edges(&[1, 1, n - 3]));
    }
    push(E6, star_edges(&[1, 2, 2]));
    push(E7, star_edges(&[1, 2, 3]));
    push(E8, star_edges(&[1, 2, 4]));
    push(ATilde0, (1, vec![(0, 0)]));
    push(ATilde(1), (2, vec![(0, 1), (0, 1)]));
    for n in 2..max_vertices {
        let mut edges = path_graph(n + 1);
        edges.push((0, n));
        push(ATilde(n), (n + 1, edges));
    }
    for n in 4..max_vertices {
        push(DTilde(n), d_tilde(n));
    }
    push(ETilde6, star_edges(&[2, 2, 2]));
    push(ETilde7, star_edges(&[1, 3, 3]));
    push(ETilde8, star_edges(&[1, 2, 5]));
    out
}

pub fn relabel(g: &Multigraph, rng: &mut TestRng) -> Multigraph {
    let mut perm: Vec<usize> = (0..g.vertex_count).collect();
    perm.shuffle(rng);
    Multigraph::new(g.vertex_count, g.edges.iter().map(|&(a, b)| (perm[a], perm[b])))
}

/// An extended diagram with one more edge or one more pendant vertex.
pub fn perturb(g: &Multigraph, rng: &mut TestRng) -> Multigraph {
    let n = g.vertex_count;
    let mut edges = g.edges.clone();
    if rng.gen_bool(0.5) {
        let a = rng.gen_range(0..n);
        edges.push((a, n));
        Multigraph::new(n + 1, edges)
    } else {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        edges.push((a, b));
        Multigraph::new(n, edges)
    }
}
