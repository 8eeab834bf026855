//! Hamiltonian paths by backtracking with a fewest-exits-first move order.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamiltonianSearch {
    Found(Vec<usize>),
    /// The search was exhaustive.
    NoneExists,
    BudgetExhausted,
}

impl HamiltonianSearch {
    pub fn path(&self) -> Option<&[usize]> {
        match self {
            HamiltonianSearch::Found(p) => Some(p),
            _ => None,
        }
    }
}

struct Walk<'g, F> {
    g: &'g Graph,
    path: Vec<usize>,
    visited: Vec<bool>,
    /// Unvisited neighbours per vertex.
    exits: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
    visit: F,
}

enum Flow {
    Continue,
    Stop,
    OutOfBudget,
}

impl<F: FnMut(&[usize]) -> bool> Walk<'_, F> {
    fn enter(&mut self, v: usize) {
        self.visited[v] = true;
        self.path.push(v);
        for &w in self.g.neighbors(v) {
            self.exits[w] -= 1;
        }
    }

    fn leave(&mut self, v: usize) {
        for &w in self.g.neighbors(v) {
            self.exits[w] += 1;
        }
        self.path.pop();
        self.visited[v] = false;
    }

    /// An unvisited vertex away from `tip` with at most one unvisited
    /// neighbour must be the far end of the path, so two of them, or one
    /// with no way in at all, end the branch.
    fn dead(&self, tip: usize) -> bool {
        let n = self.g.n();
        let remaining = n - self.path.len();
        let mut ends = 0;
        for w in (0..n).filter(|&w| !self.visited[w]) {
            let adjacent = self.g.has_edge(tip, w);
            match self.exits[w] {
                0 if !adjacent || remaining > 1 => return true,
                1 if !adjacent => ends += 1,
                _ => {}
            }
        }
        ends > 1
    }

    fn extend(&mut self) -> Flow {
        let n = self.g.n();
        if self.path.len() == n {
            return if (self.visit)(&self.path) { Flow::Continue } else { Flow::Stop };
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Flow::OutOfBudget;
        }
        let tip = *self.path.last().expect("nonempty path");
        if self.dead(tip) {
            return Flow::Continue;
        }
        let mut next: Vec<usize> = self.g.neighbors(tip).iter().copied().filter(|&w| !self.visited[w]).collect();
        next.sort_by_key(|&w| (self.exits[w], w));
        for w in next {
            self.enter(w);
            let flow = self.extend();
            self.leave(w);
            if !matches!(flow, Flow::Continue) {
                return flow;
            }
        }
        Flow::Continue
    }
}

/// Calls `visit` on Hamiltonian paths until it returns false. Each path is
/// reported from both ends. Returns false if `max_nodes` ran out first.
pub fn for_each_hamiltonian_path(g: &Graph, max_nodes: u64, visit: impl FnMut(&[usize]) -> bool) -> bool {
    let n = g.n();
    let mut walk = Walk {
        g,
        path: Vec::with_capacity(n),
        visited: vec![false; n],
        exits: (0..n).map(|v| g.degree(v)).collect(),
        nodes: 0,
        max_nodes,
        visit,
    };
    if n == 0 {
        (walk.visit)(&[]);
        return true;
    }
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&v| (g.degree(v), v));
    for s in starts {
        walk.enter(s);
        let flow = walk.extend();
        walk.leave(s);
        match flow {
            Flow::Continue => {}
            Flow::Stop => return true,
            Flow::OutOfBudget => return false,
        }
    }
    true
}

pub fn find_hamiltonian_path(g: &Graph, max_nodes: u64) -> HamiltonianSearch {
    let mut found = None;
    let finished = for_each_hamiltonian_path(g, max_nodes, |p| {
        found = Some(p.to_vec());
        false
    });
    match (found, finished) {
        (Some(p), _) => HamiltonianSearch::Found(p),
        (None, true) => HamiltonianSearch::NoneExists,
        (None, false) => HamiltonianSearch::BudgetExhausted,
    }
}
