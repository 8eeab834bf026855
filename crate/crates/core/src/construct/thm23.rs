//! Labelings within `⌈Δ^(1/δ)⌉ + 1` labels for minimum degree at least two.
//!
//! With `t = ⌈Δ^(1/δ)⌉` the labels are `1..=t` plus a marker `t + 1` that
//! only ever appears next to the root: the first spoke block and the
//! hub-side edges of a pendant gadget. The root is then the vertex with the
//! most marker edges, every other spoke block carries its own label, and
//! neighbours inside one block are told apart by label counts (when they
//! see nothing beyond the root's neighbourhood, or barely do) or by
//! distinct label multisets on their edges one layer out.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::labeling::{Certificate, Method};
use crate::solver::{self, Clock, SolveOutcome};

use super::bound::{block_size, multiset_tuple_pool, multisets, paper_bound};
use super::gadget::find_pendant_gadget;
use super::propagate::{apply_gadget, Builder, Chooser, LayerPartition};
use super::{attempt_seed, certify, ConstructConfig, ConstructError};

/// Maximum degree up to which the exact search replaces the construction.
pub const SMALL_DEGREE: usize = 5;

pub fn construct_thm23(g: &Graph, config: &ConstructConfig, clock: &dyn Clock) -> Result<Certificate, ConstructError> {
    if !g.is_connected() {
        return Err(ConstructError::Disconnected);
    }
    let stats = g.degree_stats();
    let (min, max) = (stats.min, stats.max);
    let bound = paper_bound(min, max).map_err(|_| ConstructError::MinDegreeBelowTwo(min))?;

    if max <= SMALL_DEGREE {
        let cap = small_degree_cap(g, max).min(bound);
        if let Ok(SolveOutcome::Solved(found)) = solver::exact_distinguishing_index(g, cap, &config.solver, clock) {
            return Ok(found.certificate);
        }
    }

    let t = bound - 1;
    let d = block_size(min, max).expect("degrees checked");
    let mut uncovered = None;
    let mut last = None;
    for attempt in 0..=config.repair_attempts {
        let (chooser, seed) = match attempt {
            0 => (Chooser::deterministic(), None),
            a => (Chooser::seeded(attempt_seed(config, a)), Some(attempt_seed(config, a))),
        };
        let (labels, covered) = attempt_labels(g, min, t, d, chooser);
        let cert = certify(g, labels, Method::DegreeBound, seed);
        match (cert.distinguishing, covered) {
            (true, true) => return Ok(cert),
            (true, false) => {
                uncovered.get_or_insert(cert);
            }
            (false, _) => last = Some(cert),
        }
    }

    if max > SMALL_DEGREE {
        if let Ok(SolveOutcome::Solved(found)) = solver::exact_distinguishing_index(g, bound, &config.solver, clock) {
            let mut cert = found.certificate;
            cert.method = Method::Repair;
            return Ok(cert);
        }
    }
    if let Some(mut cert) = uncovered {
        cert.method = Method::Repair;
        return Ok(cert);
    }
    Ok(last.expect("at least one attempt"))
}

/// Label cap for `Δ ≤ 5`: `Δ − 1` except for `K_4` and `K_{3,3}`, which
/// need `Δ`, and cycles, which need up to 3.
fn small_degree_cap(g: &Graph, max: usize) -> usize {
    if max <= 2 {
        return 3;
    }
    let k4 = g.n() == 4 && g.m() == 6;
    let k33 = g.n() == 6 && g.degree_stats().regular == Some(3) && !has_triangle(g);
    if k4 || k33 {
        max
    } else {
        max - 1
    }
}

fn has_triangle(g: &Graph) -> bool {
    g.edges()
        .iter()
        .any(|&(u, v)| g.neighbors(u).iter().any(|&w| w != v && g.has_edge(v, w)))
}

/// One pass of the construction. Returns the labels and whether the spoke
/// blocks of size `d` covered the root's neighbourhood; when they do not,
/// blocks are enlarged to fit and the result is only a fallback.
fn attempt_labels(g: &Graph, min: usize, t: usize, d: usize, mut chooser: Chooser) -> (Vec<u32>, bool) {
    let marker = t as u32 + 1;
    let max = g.degree_stats().max;
    let roots: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == max).collect();
    let root = chooser.pick(&roots);
    let gadget = find_pendant_gadget(g, root);
    let mut b = Builder::new(g, root, 1, (1..=t as u32).collect(), t + 2, chooser);
    apply_gadget(&mut b, &gadget, marker);

    let spokes = b.layers.layer(1).len() - 2 * gadget.triangles.len();
    let covered = spokes <= (t + 1) * d;
    let size = if covered { d } else { spokes.div_ceil(t + 1) };
    let part = LayerPartition::build(g, &b.layers, size, &gadget, &mut b.chooser);

    for (i, block) in part.blocks.iter().enumerate() {
        let label = if i == 0 { marker } else { i as u32 };
        for &x in block {
            let e = b.edge(root, x);
            b.labels[e] = label;
        }
    }

    let reach = |x: usize| part.m2_split.iter().flatten().find(|(_, xs)| xs.contains(&x)).map_or(0, |&(j, _)| j);
    for block in &part.blocks {
        // Vertices told apart by full label counts: M1, and M2 members
        // that see fewer than δ − 1 vertices of the second layer.
        let mut by_counts: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut by_tuples: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &x in block {
            match reach(x) {
                j if j + 1 < min => by_counts.entry(j).or_default().push(x),
                j => by_tuples.entry(j).or_default().push(x),
            }
        }
        for group in by_counts.values() {
            b.distinct_counts(group);
        }
        for (&j, group) in &by_tuples {
            assign_tuples(&mut b, j, t, group);
        }
    }
    let inside: Vec<usize> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(e, &(u, v))| b.labels[e] == 0 && b.depth(u) == 1 && b.depth(v) == 1)
        .map(|(e, _)| e)
        .collect();
    for e in inside {
        b.labels[e] = 1;
    }

    b.propagate();
    b.finish();
    (b.labels, covered)
}

/// Gives the edges from each member out to the second layer a label
/// multiset over `1..=t` no other member of the group has.
fn assign_tuples(b: &mut Builder, j: usize, t: usize, group: &[usize]) {
    let pool = multiset_tuple_pool(j, group.len()).expect("j ≥ 1");
    let mut tuples = if pool.r <= t {
        pool.tuples
    } else {
        multisets(j, t, usize::MAX)
    };
    b.chooser.shuffle(&mut tuples);
    let mut members = group.to_vec();
    b.chooser.shuffle(&mut members);
    for (k, &x) in members.iter().enumerate() {
        let mut tuple = tuples[k % tuples.len()].clone();
        b.chooser.shuffle(&mut tuple);
        let out: Vec<usize> = b
            .free_edges(x)
            .into_iter()
            .filter(|&(_, w)| b.depth(w) == 2)
            .map(|(e, _)| e)
            .collect();
        for (e, l) in out.into_iter().zip(tuple) {
            b.labels[e] = l;
        }
    }
}
