//! The symmetric Tits form `2 I - A` of a multigraph, where `A` counts the
//! edges between two vertices and each loop adds 2 to the diagonal. On a
//! connected graph it is positive definite exactly for Dynkin diagrams and
//! positive semidefinite, but not definite, exactly for extended ones.

use invcat_core::quiver::Multigraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Definiteness {
    Definite,
    Semidefinite,
    Indefinite,
}

pub fn tits_matrix(g: &Multigraph) -> Vec<Vec<i128>> {
    let n = g.vertex_count;
    let mut m = vec![vec![0i128; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(a, b) in &g.edges {
        if a == b {
            m[a][a] -= 2;
        } else {
            m[a][b] -= 1;
            m[b][a] -= 1;
        }
    }
    m
}

/// Fraction-free Gaussian elimination.
pub fn determinant(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

fn principal_minor(m: &[Vec<i128>], subset: &[usize]) -> i128 {
    determinant(
        subset
            .iter()
            .map(|&i| subset.iter().map(|&j| m[i][j]).collect())
            .collect(),
    )
}

pub fn definiteness(g: &Multigraph) -> Definiteness {
    let m = tits_matrix(g);
    let n = m.len();
    let leading_positive = (1..=n).all(|k| principal_minor(&m, &(0..k).collect::<Vec<_>>()) > 0);
    if leading_positive {
        return Definiteness::Definite;
    }
    let all_nonnegative = (1u32..1 << n).all(|mask| {
        let subset: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        principal_minor(&m, &subset) >= 0
    });
    if all_nonnegative {
        Definiteness::Semidefinite
    } else {
        Definiteness::Indefinite
    }
}
