//! Random instances shared by the integration tests.

#![allow(dead_code)]

pub mod diagrams;
pub mod tits;

use std::collections::BTreeMap;

use invcat_core::action::{ActingGroup, ActionError, ActionSpec, GeneratorSpec};
use invcat_core::category::{build_invariant_quiver, InvariantQuiverReport};
use invcat_core::engine::{compute_profiles, ProfileTable};
use invcat_core::field::{CyclotomicField, Field, PrimeField, Rationals};
use invcat_core::linalg::Matrix;
use invcat_core::quiver::{Quiver, VertexId, DEFAULT_PATH_CAP};
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

/// Element pools for building finite-order matrices over one field.
pub struct Pools<F: Field> {
    pub field: F,
    /// Roots of unity used as monomial entries.
    pub roots: Vec<F::Elem>,
    /// Small elements used for conjugating matrices.
    pub entries: Vec<F::Elem>,
}

pub fn rational_pools() -> Pools<Rationals> {
    let q = |n: i64| BigRational::from_integer(n.into());
    Pools {
        field: Rationals,
        roots: vec![q(1), q(-1)],
        entries: (-2..=2).map(q).collect(),
    }
}

pub fn cyclotomic3_pools() -> Pools<CyclotomicField> {
    let f = CyclotomicField::new(3).unwrap();
    let roots: Vec<_> = (0..3)
        .flat_map(|k| {
            let z = f.zeta_pow(k);
            [z.clone(), f.neg(&z)]
        })
        .collect();
    let entries = vec![
        f.zero(),
        f.one(),
        f.from_int(-1),
        f.zeta_pow(1),
        f.neg(&f.zeta_pow(1)),
        f.add(&f.one(), &f.zeta_pow(1)),
    ];
    Pools {
        field: f,
        roots,
        entries,
    }
}

pub fn prime_pools(p: u64) -> Pools<PrimeField> {
    let f = PrimeField::new(p).unwrap();
    Pools {
        field: f,
        roots: (1..p).collect(),
        entries: (0..p).collect(),
    }
}

fn random_matrix<F: Field>(pools: &Pools<F>, d: usize, rng: &mut TestRng) -> Matrix<F::Elem> {
    let data = (0..d * d).map(|_| pools.entries.choose(rng).unwrap().clone()).collect();
    Matrix::from_vec(d, d, data).unwrap()
}

pub fn random_invertible<F: Field>(pools: &Pools<F>, d: usize, rng: &mut TestRng) -> Matrix<F::Elem> {
    loop {
        let m = random_matrix(pools, d, rng);
        if m.rank(&pools.field) == d {
            return m;
        }
    }
}

/// A permutation matrix with root-of-unity entries.
pub fn random_monomial<F: Field>(pools: &Pools<F>, d: usize, rng: &mut TestRng) -> Matrix<F::Elem> {
    let mut perm: Vec<usize> = (0..d).collect();
    perm.shuffle(rng);
    let mut m = Matrix::zeros(&pools.field, d, d);
    for (i, &j) in perm.iter().enumerate() {
        m.set(i, j, pools.roots.choose(rng).unwrap().clone());
    }
    m
}

/// A matrix of finite order: a conjugated monomial matrix, or occasionally
/// an arbitrary invertible one, left to the closure cap to reject.
pub fn random_finite_order<F: Field>(pools: &Pools<F>, d: usize, rng: &mut TestRng) -> Matrix<F::Elem> {
    let f = &pools.field;
    if f.characteristic() != 0 && rng.gen_bool(0.25) {
        return random_invertible(pools, d, rng);
    }
    let p = random_invertible(pools, d, rng);
    let m = random_monomial(pools, d, rng);
    p.mul(f, &m).unwrap().mul(f, &p.inverse(f).unwrap()).unwrap()
}

/// A quiver on at most `max_vertices` vertices with 1 to 4 arrow spaces of
/// dimension at most `max_dim`; loops allowed.
pub fn random_quiver(rng: &mut TestRng, max_vertices: usize, max_dim: usize) -> Quiver {
    let n = rng.gen_range(1..=max_vertices);
    let mut q = Quiver::new((0..n).map(|i| format!("v{i}"))).unwrap();
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|s| (0..n).map(move |t| (s, t))).collect();
    pairs.shuffle(rng);
    let arrows = rng.gen_range(1..=4.min(pairs.len()));
    for &(s, t) in &pairs[..arrows] {
        let dim = if rng.gen_bool(0.6) {
            rng.gen_range(1..=2.min(max_dim))
        } else {
            rng.gen_range(1..=max_dim)
        };
        q.set_arrow(s, t, dim).unwrap();
    }
    q
}

pub struct Instance<F: Field> {
    pub quiver: Quiver,
    pub spec: ActionSpec<F::Elem>,
    pub group: ActingGroup<F>,
    pub max_degree: usize,
}

/// Rough cost of computing profiles to degree `d`.
fn profile_cost(quiver: &Quiver, d: usize, generators: usize) -> usize {
    quiver
        .paths_by_degree(d, DEFAULT_PATH_CAP)
        .map(|waves| {
            waves
                .iter()
                .flatten()
                .map(|p| {
                    let dim = quiver.path_dim(p);
                    dim * dim * generators.max(1) * (1 + p.degree())
                })
                .sum()
        })
        .unwrap_or(usize::MAX)
}

/// One random instance: a quiver, 1 or 2 generator tuples whose closure has
/// at most `group_cap` elements, and the largest degree `<= max_degree`
/// within `budget`.
pub fn random_instance<F: Field>(
    pools: &Pools<F>,
    rng: &mut TestRng,
    max_vertices: usize,
    max_dim: usize,
    max_degree: usize,
    group_cap: usize,
    budget: usize,
) -> Instance<F> {
    loop {
        let quiver = random_quiver(rng, max_vertices, max_dim);
        let count = rng.gen_range(1..=2);
        let generators: Vec<GeneratorSpec<F::Elem>> = (0..count)
            .map(|i| GeneratorSpec {
                name: format!("g{i}"),
                matrices: quiver
                    .track_edges()
                    .iter()
                    .map(|e| ((e.source, e.target), random_finite_order(pools, e.dim, rng)))
                    .collect(),
            })
            .collect();
        let mut spec = ActionSpec::new(generators);
        spec.group_cap = group_cap;
        let group = match ActingGroup::close(&pools.field, &quiver, &spec) {
            Ok(g) => g,
            Err(ActionError::ClosureCapExceeded { .. }) => continue,
            Err(e) => panic!("{e}"),
        };
        let mut d = 1;
        while d < max_degree && profile_cost(&quiver, d + 1, count) <= budget {
            d += 1;
        }
        return Instance {
            quiver,
            spec,
            group,
            max_degree: d,
        };
    }
}

/// A random acyclic Schurian quiver on `2..=max_vertices` vertices: arrows
/// only go from lower to higher vertex numbers.
pub fn random_acyclic_schurian(rng: &mut TestRng, max_vertices: usize) -> Quiver {
    let n = rng.gen_range(2..=max_vertices);
    let mut q = Quiver::new((0..n).map(|i| format!("v{i}"))).unwrap();
    for s in 0..n {
        for t in s + 1..n {
            if rng.gen_bool(0.4) {
                q.set_arrow(s, t, 1).unwrap();
            }
        }
    }
    if q.track_edges().is_empty() {
        q.set_arrow(0, 1, 1).unwrap();
    }
    q
}

/// A character action of a product of at most two cyclic groups of order
/// dividing `m`, over the `m`-th cyclotomic field.
pub fn random_character_action(
    field: &CyclotomicField,
    quiver: &Quiver,
    rng: &mut TestRng,
) -> ActionSpec<<CyclotomicField as Field>::Elem> {
    let m = u64::from(field.order());
    let count = rng.gen_range(1..=2);
    let generators = (0..count)
        .map(|i| GeneratorSpec {
            name: format!("g{i}"),
            matrices: quiver
                .track_edges()
                .iter()
                .map(|e| {
                    let x = field.zeta_pow(rng.gen_range(0..m));
                    ((e.source, e.target), Matrix::from_vec(1, 1, vec![x]).unwrap())
                })
                .collect(),
        })
        .collect();
    ActionSpec::new(generators)
}

pub struct Pipeline<F: Field> {
    pub group: ActingGroup<F>,
    pub table: ProfileTable<F>,
    pub report: InvariantQuiverReport,
}

pub fn pipeline<F: Field>(field: &F, quiver: &Quiver, spec: &ActionSpec<F::Elem>, d: usize) -> Pipeline<F> {
    let group = ActingGroup::close(field, quiver, spec).unwrap();
    let table = compute_profiles(quiver, &group, d, DEFAULT_PATH_CAP).unwrap();
    let report = build_invariant_quiver(quiver, &group, &table);
    Pipeline { group, table, report }
}

/// Generator multiplicities keyed by vertex sequence.
pub fn multiplicities(report: &InvariantQuiverReport) -> BTreeMap<Vec<VertexId>, usize> {
    report
        .generators
        .iter()
        .map(|g| (g.path.vertices().to_vec(), g.multiplicity))
        .collect()
}
