//! Automorphism groups and the distinguishing check.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::graph::Graph;
use crate::labeling::{Certificate, EdgeLabeling, LabelingError, Method};
use crate::perm::{Permutation, PermutationError};
use crate::refine::{self, LabeledView};

/// Graphs with at most this many vertices use the exhaustive scan.
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 8;

/// Largest group the explicit enumerator will materialise.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutGroup {
    /// Non-identity automorphisms generating the whole group.
    pub generators: Vec<Permutation>,
    pub order: BigUint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    /// Enumerate every automorphism by backtracking.
    Exhaustive,
    /// Individualization–refinement with orbit–stabilizer chaining.
    Refinement,
    /// Exhaustive up to `brute_force_cap` vertices, refinement above.
    Auto { brute_force_cap: usize },
}

impl Default for Engine {
    fn default() -> Self {
        Engine::Auto {
            brute_force_cap: DEFAULT_BRUTE_FORCE_CAP,
        }
    }
}

/// `Aut(g)` with the default engine choice.
pub fn automorphism_group(g: &Graph) -> AutGroup {
    automorphism_group_with(g, Engine::default())
}

pub fn automorphism_group_with(g: &Graph, engine: Engine) -> AutGroup {
    group_of(&LabeledView::plain(g), g.n(), engine)
}

/// Automorphisms of `g` that also preserve `labels` (indexed by canonical edge order).
pub fn labeled_automorphism_group(g: &Graph, labels: &[u32], engine: Engine) -> AutGroup {
    assert_eq!(labels.len(), g.m(), "one label per edge");
    group_of(&LabeledView::new(g, labels), g.n(), engine)
}

fn group_of(view: &LabeledView, n: usize, engine: Engine) -> AutGroup {
    let exhaustive = match engine {
        Engine::Exhaustive => true,
        Engine::Refinement => false,
        Engine::Auto { brute_force_cap } => n <= brute_force_cap,
    };
    if exhaustive {
        let all = refine::enumerate_all(view, usize::MAX).expect("uncapped scan");
        AutGroup {
            order: BigUint::from(all.len()),
            generators: strong_generators(n, &all),
        }
    } else {
        let (generators, orbits) = refine::group(view);
        let order = orbits
            .iter()
            .fold(BigUint::one(), |acc, &len| acc * BigUint::from(len));
        AutGroup {
            generators: generators
                .into_iter()
                .map(Permutation::from_images_unchecked)
                .collect(),
            order,
        }
    }
}

/// One coset representative per orbit point at each level of the pointwise
/// stabilizer chain of `0, 1, 2, ...`.
fn strong_generators(n: usize, all: &[Vec<usize>]) -> Vec<Permutation> {
    let mut generators = Vec::new();
    for level in 0..n {
        let mut seen = alloc::vec![false; n];
        seen[level] = true;
        for p in all {
            if (0..level).all(|i| p[i] == i) && !seen[p[level]] {
                seen[p[level]] = true;
                generators.push(Permutation::from_images_unchecked(p.clone()));
            }
        }
    }
    generators
}

/// Every automorphism of `g` (identity included), or `None` above `cap`.
pub fn enumerate_automorphisms(g: &Graph, cap: usize) -> Option<Vec<Permutation>> {
    refine::enumerate_all(&LabeledView::plain(g), cap)
        .map(|all| all.into_iter().map(Permutation::from_images_unchecked).collect())
}

pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool, PermutationError> {
    if p.len() != g.n() {
        return Err(PermutationError::LengthMismatch {
            expected: g.n(),
            got: p.len(),
        });
    }
    Ok(g.edges().iter().all(|&(u, v)| g.has_edge(p.apply(u), p.apply(v))))
}

/// A nontrivial automorphism of `g` preserving `labels`, if one exists.
///
/// `labels` is indexed by canonical edge order and may use any values;
/// giving an edge a value used nowhere else forces every returned
/// automorphism to map that edge onto itself.
pub fn find_label_preserving(g: &Graph, labels: &[u32]) -> Option<Permutation> {
    assert_eq!(labels.len(), g.m(), "one label per edge");
    refine::find_nontrivial(&LabeledView::new(g, labels)).map(Permutation::from_images_unchecked)
}

/// Decides whether `labeling` is distinguishing and wraps the verdict.
///
/// The search runs on the edge-labeled graph itself, so a labeling broken by
/// every generator of `Aut(g)` but fixed by some product is still caught.
pub fn is_distinguishing(
    g: &Graph,
    labeling: &EdgeLabeling,
    method: Method,
) -> Result<Certificate, LabelingError> {
    if labeling.len() != g.m() {
        return Err(LabelingError::WrongLength {
            expected: g.m(),
            got: labeling.len(),
        });
    }
    let witness = find_label_preserving(g, labeling.labels());
    Ok(Certificate {
        labeling: labeling.clone(),
        distinguishing: witness.is_none(),
        witness,
        method,
        seed: None,
    })
}

/// Orbits of the group's action on canonical edge indices, each sorted,
/// ordered by smallest member.
pub fn edge_orbits(g: &Graph, group: &AutGroup) -> Vec<Vec<usize>> {
    let pairs = group.generators.iter().flat_map(|p| {
        g.edges().iter().enumerate().map(move |(i, &(u, v))| {
            let j = g
                .edge_index(p.apply(u), p.apply(v))
                .expect("generator is an automorphism");
            (i, j)
        })
    });
    let class = refine::union_find_classes(g.m(), pairs);
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut slot = alloc::vec![usize::MAX; g.m()];
    for (i, &root) in class.iter().enumerate() {
        if slot[root] == usize::MAX {
            slot[root] = orbits.len();
            orbits.push(Vec::new());
        }
        orbits[slot[root]].push(i);
    }
    orbits
}
