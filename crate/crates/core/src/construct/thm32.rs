//! Two-label labelings of connected `k`-regular graphs with `k ≥ 5`.
//!
//! Dense graphs (`k ≥ (n−1)/2`) have a Hamiltonian path, and labeling the
//! path against the rest leaves at most the path reversal to break. Sparser
//! graphs are labeled from a root whose edges all carry label 1, which
//! becomes the only vertex with no label 2 at all; its neighbours get
//! pairwise different numbers of 2s, except for one pair that shares a
//! count and differs in how many of those 2s point away from the root.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::aut::find_label_preserving;
use crate::graph::Graph;
use crate::labeling::{Certificate, Method};
use crate::solver::{self, Clock, SolveOutcome};

use super::hamilton::for_each_hamiltonian_path;
use super::propagate::{Builder, Chooser};
use super::{attempt_seed, certify, ConstructConfig, ConstructError};

/// Hamiltonian paths tried before giving up on the dense branch.
const PATHS_TRIED: usize = 32;

pub fn construct_thm32(g: &Graph, config: &ConstructConfig, clock: &dyn Clock) -> Result<Certificate, ConstructError> {
    if !g.is_connected() {
        return Err(ConstructError::Disconnected);
    }
    let k = g.degree_stats().regular.ok_or(ConstructError::NotRegular)?;
    if k < 5 {
        return Err(ConstructError::DegreeBelowFive(k));
    }

    if 2 * k + 1 >= g.n() {
        if let Some(labels) = hamiltonian_labels(g, config.hamiltonian_nodes) {
            return Ok(certify(g, labels, Method::RegularTwoLabel, None));
        }
    }

    let mut last = None;
    for attempt in 0..=config.repair_attempts {
        let (chooser, seed) = match attempt {
            0 => (Chooser::deterministic(), None),
            a => (Chooser::seeded(attempt_seed(config, a)), Some(attempt_seed(config, a))),
        };
        let cert = certify(g, attempt_labels(g, k, chooser), Method::RegularTwoLabel, seed);
        if cert.distinguishing {
            return Ok(cert);
        }
        last = Some(cert);
    }

    if let Ok(SolveOutcome::Solved(found)) = solver::exact_distinguishing_index(g, 2, &config.solver, clock) {
        let mut cert = found.certificate;
        cert.method = Method::Repair;
        return Ok(cert);
    }
    Ok(last.expect("at least one attempt"))
}

/// Path edges 1 and the rest 2, then the same with one edge near either
/// end of the path flipped so the reversal no longer fits.
fn hamiltonian_labels(g: &Graph, max_nodes: u64) -> Option<Vec<u32>> {
    let n = g.n();
    let mut found = None;
    let mut tried = 0;
    for_each_hamiltonian_path(g, max_nodes, |path| {
        let mut base = vec![2u32; g.m()];
        for w in path.windows(2) {
            base[g.edge_index(w[0], w[1]).expect("path edge")] = 1;
        }
        let ends: Vec<usize> = path.iter().take(3).chain(path.iter().skip(n.saturating_sub(3))).copied().collect();
        let flips: BTreeSet<usize> = ends
            .iter()
            .flat_map(|&v| g.neighbors(v).iter().map(move |&w| g.edge_index(v, w).expect("edge")))
            .collect();
        let candidates = core::iter::once(base.clone()).chain(flips.into_iter().map(|e| {
            let mut c = base.clone();
            c[e] = 3 - c[e];
            c
        }));
        found = candidates.into_iter().find(|c| find_label_preserving(g, c).is_none());
        tried += 1;
        found.is_none() && tried < PATHS_TRIED
    });
    found
}

fn attempt_labels(g: &Graph, k: usize, mut chooser: Chooser) -> Vec<u32> {
    let all: Vec<usize> = (0..g.n()).collect();
    let root = chooser.pick(&all);
    let mut b = Builder::new(g, root, 2, vec![2, 1], 3, chooser);
    let mut first: Vec<usize> = b.layers.layer(1).to_vec();
    b.chooser.shuffle(&mut first);
    for &x in &first {
        let e = b.edge(root, x);
        b.labels[e] = 1;
    }

    // v_2 first, then v_1 copying its count, then the rest.
    if first.len() >= 2 {
        first.swap(0, 1);
    }
    let mut used = BTreeSet::new();
    let mut pair: Option<(usize, usize)> = None;
    for (idx, &x) in first.iter().enumerate() {
        let (outward, sideways) = split_free(&b, x);
        let have = b.counts(x)[2] as usize;
        if idx == 1 {
            let (total, out_twos) = pair.expect("v_2 done");
            let copied = (0..=outward.len())
                .filter(|&a| a != out_twos && a + have <= total)
                .find(|&a| total - have - a <= sideways.len());
            if let Some(a) = copied {
                place(&mut b, &outward, &sideways, a, total - have - a);
                continue;
            }
        }
        let reach = have..=have + outward.len() + sideways.len();
        let mut targets: Vec<usize> = reach.clone().filter(|c| (1..k).contains(c) && !used.contains(c)).collect();
        if targets.is_empty() {
            targets = reach.filter(|c| (1..k).contains(c)).collect();
        }
        let target = if targets.is_empty() { have.max(1) } else { b.chooser.pick(&targets) };
        let twos = target.saturating_sub(have);
        let out_twos = twos.min(outward.len());
        place(&mut b, &outward, &sideways, out_twos, twos - out_twos);
        used.insert(target);
        if idx == 0 {
            pair = Some((target, out_twos));
        }
    }

    b.propagate();
    b.finish();

    // Nobody but the root may end up with only 1s around it.
    for w in (0..g.n()).filter(|&w| w != root) {
        if b.counts(w)[2] == 0 {
            let far = g
                .neighbors(w)
                .iter()
                .copied()
                .filter(|&y| y != root)
                .max_by_key(|&y| (b.depth(y), y))
                .expect("degree at least 5");
            let e = b.edge(w, far);
            b.labels[e] = 2;
        }
    }
    b.labels
}

/// Free edges at `x` going one layer out, and those staying in its layer.
fn split_free(b: &Builder, x: usize) -> (Vec<usize>, Vec<usize>) {
    let depth = b.depth(x);
    let free = b.free_edges(x);
    let outward = free.iter().filter(|&&(_, w)| b.depth(w) > depth).map(|&(e, _)| e).collect();
    let sideways = free.iter().filter(|&&(_, w)| b.depth(w) == depth).map(|&(e, _)| e).collect();
    (outward, sideways)
}

/// Puts `a` 2s on the outward edges and `c` on the sideways ones; every
/// other free edge gets 1.
fn place(b: &mut Builder, outward: &[usize], sideways: &[usize], a: usize, c: usize) {
    for (i, &e) in outward.iter().enumerate() {
        b.labels[e] = if i < a { 2 } else { 1 };
    }
    for (i, &e) in sideways.iter().enumerate() {
        b.labels[e] = if i < c { 2 } else { 1 };
    }
}
