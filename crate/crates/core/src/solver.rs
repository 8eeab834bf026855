//! Exact distinguishing index.
//!
//! [`exact_distinguishing_index`] tries `d = 1, 2, ...` labels and searches
//! label assignments edge by edge. Labels are introduced in order of first
//! use (a labeling and any renaming of its labels are equally good), which
//! also puts the first edge of the largest orbit at label 1. With partial
//! pruning on, a branch is dropped once some nontrivial automorphism
//! preserves the labels placed so far while mapping every still-unlabeled
//! edge onto itself: such an automorphism survives every completion.
//!
//! [`brute_force_index`] is the independent oracle used in tests. It lists
//! the automorphism group explicitly and checks every labeling up to
//! renaming of labels against every group element.

use alloc::vec;
use alloc::vec::Vec;

use crate::aut::{self, Engine};
use crate::graph::Graph;
use crate::labeling::{Certificate, EdgeLabeling, Method};

/// Monotonic milliseconds since the solve started.
pub trait Clock {
    fn elapsed_ms(&self) -> u64;
}

/// A clock that never advances; only node budgets apply.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoClock;

impl Clock for NoClock {
    fn elapsed_ms(&self) -> u64 {
        0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_millis: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 10_000_000,
            max_millis: 60_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub budget: Budget,
    pub partial_pruning: bool,
    pub engine: Engine,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            budget: Budget::default(),
            partial_pruning: true,
            engine: Engine::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub dprime: usize,
    /// Distinguishing, with exactly `dprime` labels.
    pub certificate: Certificate,
    pub stats: SolveStats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Solved(SolveResult),
    /// The budget ran out while testing `lower_bound` labels; every smaller
    /// count was searched exhaustively.
    Unknown { lower_bound: usize, stats: SolveStats },
    /// No distinguishing labeling with at most `d_max` labels exists.
    ExceedsMax { lower_bound: usize, stats: SolveStats },
}

impl SolveOutcome {
    pub fn solved(&self) -> Option<&SolveResult> {
        match self {
            SolveOutcome::Solved(r) => Some(r),
            _ => None,
        }
    }

    pub fn stats(&self) -> SolveStats {
        match self {
            SolveOutcome::Solved(r) => r.stats,
            SolveOutcome::Unknown { stats, .. } | SolveOutcome::ExceedsMax { stats, .. } => *stats,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    NoEdges,
    #[error("label limit must be at least 1")]
    ZeroLabelLimit,
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    labels: Vec<u32>,
    probe: Vec<u32>,
    d: u32,
    nodes: u64,
    budget: Budget,
    clock: &'a dyn Clock,
    pruning: bool,
}

impl Search<'_> {
    fn over_budget(&self) -> bool {
        self.nodes > self.budget.max_nodes
            || (self.nodes.is_multiple_of(256) && self.clock.elapsed_ms() > self.budget.max_millis)
    }

    /// Is some nontrivial automorphism forced on every completion of the
    /// first `assigned` positions? With nothing left unassigned this is the
    /// plain distinguishing test.
    fn symmetric(&mut self, assigned: usize) -> bool {
        for (pos, &e) in self.order.iter().enumerate() {
            self.probe[e] = if pos < assigned {
                self.labels[e]
            } else {
                self.d + 1 + pos as u32
            };
        }
        aut::find_label_preserving(self.g, &self.probe).is_some()
    }

    fn dfs(&mut self, pos: usize, used: u32) -> Step {
        let m = self.order.len();
        let e = self.order[pos];
        for l in 1..=self.d.min(used + 1) {
            self.nodes += 1;
            if self.over_budget() {
                return Step::OutOfBudget;
            }
            self.labels[e] = l;
            let last = pos + 1 == m;
            if last || self.pruning {
                if !self.symmetric(pos + 1) {
                    if last {
                        return Step::Found;
                    }
                } else {
                    continue;
                }
            }
            match self.dfs(pos + 1, used.max(l)) {
                Step::Exhausted => {}
                other => return other,
            }
        }
        self.labels[e] = 0;
        Step::Exhausted
    }
}

/// Edge order for the search: orbits of `Aut(g)` by descending size, each
/// orbit contiguous, then canonical order.
pub fn search_order(g: &Graph, engine: Engine) -> Vec<usize> {
    let group = aut::automorphism_group_with(g, engine);
    let mut orbits = aut::edge_orbits(g, &group);
    orbits.sort_by_key(|o| (core::cmp::Reverse(o.len()), o[0]));
    orbits.into_iter().flatten().collect()
}

/// `D'(g)` by incremental label-count search, for counts up to `d_max`.
pub fn exact_distinguishing_index(
    g: &Graph,
    d_max: usize,
    config: &SolverConfig,
    clock: &dyn Clock,
) -> Result<SolveOutcome, SolveError> {
    if d_max == 0 {
        return Err(SolveError::ZeroLabelLimit);
    }
    if g.m() == 0 {
        return Err(SolveError::NoEdges);
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let m = g.m();
    let mut search = Search {
        g,
        order: search_order(g, config.engine),
        labels: vec![0; m],
        probe: vec![0; m],
        d: 1,
        nodes: 0,
        budget: config.budget,
        clock,
        pruning: config.partial_pruning,
    };
    let stats = |s: &Search| SolveStats {
        nodes: s.nodes,
        elapsed_ms: clock.elapsed_ms(),
    };
    for d in 1..=d_max.min(m) {
        search.d = d as u32;
        search.labels.iter_mut().for_each(|l| *l = 0);
        match search.dfs(0, 0) {
            Step::Found => {
                let labeling = EdgeLabeling::new(g, search.labels.clone()).expect("complete labeling");
                let certificate = aut::is_distinguishing(g, &labeling, Method::ExactSearch).expect("sized to g");
                debug_assert!(certificate.distinguishing);
                return Ok(SolveOutcome::Solved(SolveResult {
                    dprime: d,
                    certificate,
                    stats: stats(&search),
                }));
            }
            Step::OutOfBudget => {
                return Ok(SolveOutcome::Unknown {
                    lower_bound: d,
                    stats: stats(&search),
                })
            }
            Step::Exhausted => {}
        }
    }
    // With d = m every edge can get its own label, so failing there means no
    // labeling works at all (the graph has an automorphism fixing every edge).
    Ok(SolveOutcome::ExceedsMax {
        lower_bound: d_max + 1,
        stats: stats(&search),
    })
}

/// Largest edge count [`brute_force_index`] accepts.
pub const BRUTE_FORCE_MAX_EDGES: usize = 12;
/// Largest automorphism group [`brute_force_index`] lists explicitly.
pub const BRUTE_FORCE_MAX_GROUP: usize = 4_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BruteForceError {
    #[error("{m} edges exceeds the brute-force cap of {cap}")]
    TooManyEdges { m: usize, cap: usize },
    #[error("automorphism group has more than {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("no edge labeling is distinguishing")]
    NoDistinguishingLabeling,
}

/// Nontrivial automorphisms as permutations of edge indices, flattened,
/// found by plain vertex-by-vertex backtracking.
fn edge_permutations(g: &Graph, cap: usize) -> Option<Vec<u8>> {
    fn go(g: &Graph, v: usize, images: &mut [usize], used: &mut [bool], out: &mut Vec<u8>, count: &mut usize, cap: usize) -> bool {
        let n = g.n();
        if v == n {
            if images.iter().enumerate().all(|(i, &x)| i == x) {
                return true;
            }
            *count += 1;
            if *count > cap {
                return false;
            }
            for &(a, b) in g.edges() {
                out.push(g.edge_index(images[a], images[b]).unwrap() as u8);
            }
            return true;
        }
        for y in 0..n {
            if used[y] || g.degree(y) != g.degree(v) {
                continue;
            }
            if !(0..v).all(|u| g.has_edge(u, v) == g.has_edge(images[u], y)) {
                continue;
            }
            images[v] = y;
            used[y] = true;
            let ok = go(g, v + 1, images, used, out, count, cap);
            used[y] = false;
            if !ok {
                return false;
            }
        }
        true
    }
    let mut images = vec![0; g.n()];
    let mut used = vec![false; g.n()];
    let mut out = Vec::new();
    let mut count = 0;
    go(g, 0, &mut images, &mut used, &mut out, &mut count, cap).then_some(out)
}

/// Smallest `d` such that some labeling with exactly `d` labels is fixed by
/// no nontrivial automorphism, by exhaustive enumeration. Test oracle only.
pub fn brute_force_index(g: &Graph) -> Result<usize, BruteForceError> {
    let m = g.m();
    if m > BRUTE_FORCE_MAX_EDGES {
        return Err(BruteForceError::TooManyEdges {
            m,
            cap: BRUTE_FORCE_MAX_EDGES,
        });
    }
    let flat = edge_permutations(g, BRUTE_FORCE_MAX_GROUP).ok_or(BruteForceError::GroupTooLarge {
        cap: BRUTE_FORCE_MAX_GROUP,
    })?;
    // Small supports first: a preserving element is usually found early.
    let mut perms: Vec<&[u8]> = if m == 0 { Vec::new() } else { flat.chunks(m).collect() };
    let moved = |p: &[u8]| p.iter().enumerate().filter(|&(i, &x)| i != x as usize).count();
    perms.sort_by_cached_key(|p| moved(p));
    let group_nontrivial = !perms.is_empty() || (m == 0 && g.n() > 1);

    let distinguishing = |labels: &[u8]| {
        !perms
            .iter()
            .any(|p| p.iter().enumerate().all(|(e, &img)| labels[img as usize] == labels[e]))
    };

    if m == 0 {
        return if group_nontrivial {
            Err(BruteForceError::NoDistinguishingLabeling)
        } else {
            Ok(1)
        };
    }

    // Restricted growth strings with exactly `d` blocks.
    fn blocks(pos: usize, used: usize, d: usize, labels: &mut [u8], accept: &dyn Fn(&[u8]) -> bool) -> bool {
        let m = labels.len();
        if pos == m {
            return used == d && accept(labels);
        }
        if used + (m - pos) < d {
            return false;
        }
        for l in 0..(used + 1).min(d) {
            labels[pos] = l as u8;
            if blocks(pos + 1, used.max(l + 1), d, labels, accept) {
                return true;
            }
        }
        false
    }
    let mut labels = vec![0u8; m];
    for d in 1..=m {
        if blocks(0, 0, d, &mut labels, &distinguishing) {
            return Ok(d);
        }
    }
    Err(BruteForceError::NoDistinguishingLabeling)
}
