//! Equitable colour refinement and individualization–refinement search over
//! edge-labeled graphs.
//!
//! A vertex's refined colour is its old colour together with the multiset of
//! `(neighbour colour, edge label)` pairs, iterated to a fixpoint. The
//! multiset is summarised by a commutative hash; collisions can only merge
//! cells, which keeps the procedure automorphism-invariant, and every
//! candidate mapping is checked explicitly before it is returned.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

#[inline]
pub(crate) fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// A graph with edge labels and vertex colours, read-only.
pub(crate) struct LabeledView {
    n: usize,
    adj: Vec<Vec<(usize, u32)>>,
    vertex_color: Vec<u32>,
}

impl LabeledView {
    pub(crate) fn new(g: &Graph, labels: &[u32]) -> Self {
        debug_assert_eq!(labels.len(), g.m());
        let mut adj = vec![Vec::new(); g.n()];
        for (&(u, v), &l) in g.edges().iter().zip(labels) {
            adj[u].push((v, l));
            adj[v].push((u, l));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        LabeledView {
            n: g.n(),
            adj,
            vertex_color: vec![0; g.n()],
        }
    }

    pub(crate) fn plain(g: &Graph) -> Self {
        Self::new(g, &vec![1; g.m()])
    }

    #[inline]
    pub(crate) fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub(crate) fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub(crate) fn vertex_color(&self, v: usize) -> u32 {
        self.vertex_color[v]
    }

    /// Label of `{u, v}`, `0` for a non-edge.
    #[inline]
    pub(crate) fn label(&self, u: usize, v: usize) -> u32 {
        let list = &self.adj[u];
        match list.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => list[i].1,
            Err(_) => 0,
        }
    }

    /// True when `images` preserves vertex colours, edges and edge labels.
    pub(crate) fn preserves(&self, images: &[usize]) -> bool {
        (0..self.n).all(|u| {
            let iu = images[u];
            self.vertex_color[u] == self.vertex_color[iu]
                && self.adj[u].len() == self.adj[iu].len()
                && self.adj[u]
                    .iter()
                    .all(|&(w, l)| w < u || self.label(iu, images[w]) == l)
        })
    }

    /// Dense colouring ranked by the initial vertex colours.
    pub(crate) fn initial_coloring(&self) -> Vec<u32> {
        let mut distinct: Vec<u32> = self.vertex_color.clone();
        distinct.sort_unstable();
        distinct.dedup();
        self.vertex_color
            .iter()
            .map(|c| distinct.binary_search(c).unwrap() as u32)
            .collect()
    }

    /// Refines a dense colouring to the coarsest equitable one below it and
    /// returns a trace hash of the splitting history.
    pub(crate) fn refine(&self, colors: &mut [u32]) -> u64 {
        let n = self.n;
        if n == 0 {
            return 0;
        }
        let mut cells = colors.iter().copied().max().map_or(0, |c| c as usize + 1);
        let mut sig = vec![0u64; n];
        let mut order: Vec<usize> = (0..n).collect();
        let mut fresh = vec![0u32; n];
        let mut trace = 0xcbf2_9ce4_8422_2325u64;
        loop {
            for (s, adj) in sig.iter_mut().zip(&self.adj) {
                let mut h = 0u64;
                for &(w, l) in adj {
                    h = h.wrapping_add(mix(((colors[w] as u64) << 32) | l as u64));
                }
                *s = mix(h ^ adj.len() as u64);
            }
            order.sort_unstable_by_key(|&v| (colors[v], sig[v]));
            let mut next = 0u32;
            let mut prev = (colors[order[0]], sig[order[0]]);
            for &v in &order {
                let key = (colors[v], sig[v]);
                if key != prev {
                    next += 1;
                    prev = key;
                }
                fresh[v] = next;
                trace = mix(trace ^ mix(((key.0 as u64) << 32) ^ key.1));
            }
            colors.copy_from_slice(&fresh);
            let new_cells = next as usize + 1;
            if new_cells == cells {
                return trace;
            }
            cells = new_cells;
        }
    }
}

/// Splits `x` off into its own cell, placed just before the rest of its old cell.
pub(crate) fn individualize(colors: &[u32], x: usize) -> Vec<u32> {
    let c = colors[x];
    colors
        .iter()
        .enumerate()
        .map(|(w, &cw)| if w != x && cw >= c { cw + 1 } else { cw })
        .collect()
}

pub(crate) fn histogram(colors: &[u32]) -> Vec<u32> {
    let cells = colors.iter().copied().max().map_or(0, |c| c as usize + 1);
    let mut h = vec![0u32; cells];
    for &c in colors {
        h[c as usize] += 1;
    }
    h
}

/// First cell with more than one vertex, and its members.
pub(crate) fn first_nonsingleton(colors: &[u32]) -> Option<Vec<usize>> {
    let h = histogram(colors);
    let target = h.iter().position(|&c| c > 1)? as u32;
    Some(
        colors
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == target)
            .map(|(v, _)| v)
            .collect(),
    )
}

/// Individualizes `x` and refines; returns the colouring and its trace.
pub(crate) fn split(view: &LabeledView, colors: &[u32], x: usize) -> (Vec<u32>, u64) {
    let mut next = individualize(colors, x);
    let trace = view.refine(&mut next);
    (next, trace)
}

/// Searches for an automorphism sending the `left` colouring onto the
/// `right` one cell by cell. Both colourings must be equitable and
/// indistinguishable by refinement.
pub(crate) fn search(view: &LabeledView, left: &[u32], right: &[u32]) -> Option<Vec<usize>> {
    let Some(cell) = first_nonsingleton(left) else {
        let mut position = vec![0usize; view.n()];
        for (v, &c) in right.iter().enumerate() {
            position[c as usize] = v;
        }
        let images: Vec<usize> = left.iter().map(|&c| position[c as usize]).collect();
        return view.preserves(&images).then_some(images);
    };
    let target = left[cell[0]];
    let (next_left, trace_left) = split(view, left, cell[0]);
    let hist_left = histogram(&next_left);
    for y in (0..view.n()).filter(|&y| right[y] == target) {
        let (next_right, trace_right) = split(view, right, y);
        if trace_left == trace_right && histogram(&next_right) == hist_left {
            if let Some(found) = search(view, &next_left, &next_right) {
                return Some(found);
            }
        }
    }
    None
}

/// Any automorphism of the view other than the identity.
pub(crate) fn find_nontrivial(view: &LabeledView) -> Option<Vec<usize>> {
    let mut colors = view.initial_coloring();
    view.refine(&mut colors);
    while let Some(cell) = first_nonsingleton(&colors) {
        let x = cell[0];
        let (left, trace_left) = split(view, &colors, x);
        let hist_left = histogram(&left);
        for &y in &cell[1..] {
            let (right, trace_right) = split(view, &colors, y);
            if trace_left == trace_right && histogram(&right) == hist_left {
                if let Some(found) = search(view, &left, &right) {
                    return Some(found);
                }
            }
        }
        colors = left;
    }
    None
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

pub(crate) fn union_find_classes(n: usize, pairs: impl Iterator<Item = (usize, usize)>) -> Vec<usize> {
    let mut uf = UnionFind::new(n);
    for (a, b) in pairs {
        uf.union(a, b);
    }
    (0..n).map(|x| uf.find(x)).collect()
}

/// Generators and the orbit lengths along the stabilizer tower of the
/// first path of the search tree; the group order is their product.
pub(crate) fn group(view: &LabeledView) -> (Vec<Vec<usize>>, Vec<usize>) {
    let n = view.n();
    let mut colors = view.initial_coloring();
    view.refine(&mut colors);
    let mut path: Vec<(Vec<u32>, Vec<usize>)> = Vec::new();
    while let Some(cell) = first_nonsingleton(&colors) {
        let (next, _) = split(view, &colors, cell[0]);
        path.push((colors, cell));
        colors = next;
    }

    let mut generators: Vec<Vec<usize>> = Vec::new();
    let mut orbit_lengths = Vec::with_capacity(path.len());
    let mut uf = UnionFind::new(n);
    for (coloring, cell) in path.iter().rev() {
        let x = cell[0];
        let (left, trace_left) = split(view, coloring, x);
        let hist_left = histogram(&left);
        for &y in &cell[1..] {
            if uf.find(y) == uf.find(x) {
                continue;
            }
            let (right, trace_right) = split(view, coloring, y);
            if trace_left != trace_right || histogram(&right) != hist_left {
                continue;
            }
            if let Some(found) = search(view, &left, &right) {
                for (v, &w) in found.iter().enumerate() {
                    uf.union(v, w);
                }
                generators.push(found);
            }
        }
        let root = uf.find(x);
        orbit_lengths.push((0..n).filter(|&v| uf.find(v) == root).count());
    }
    orbit_lengths.reverse();
    (generators, orbit_lengths)
}

/// Every automorphism of the view by vertex-by-vertex backtracking with
/// adjacency consistency checks only. `None` once more than `cap` are found.
pub(crate) fn enumerate_all(view: &LabeledView, cap: usize) -> Option<Vec<Vec<usize>>> {
    struct Scan<'a> {
        view: &'a LabeledView,
        images: Vec<usize>,
        used: Vec<bool>,
        out: Vec<Vec<usize>>,
        cap: usize,
    }
    impl Scan<'_> {
        fn go(&mut self, v: usize) -> bool {
            let n = self.view.n();
            if v == n {
                self.out.push(self.images.clone());
                return self.out.len() <= self.cap;
            }
            for y in 0..n {
                if self.used[y]
                    || self.view.vertex_color(y) != self.view.vertex_color(v)
                    || self.view.degree(y) != self.view.degree(v)
                {
                    continue;
                }
                let consistent =
                    (0..v).all(|u| self.view.label(u, v) == self.view.label(self.images[u], y));
                if !consistent {
                    continue;
                }
                self.images[v] = y;
                self.used[y] = true;
                let keep_going = self.go(v + 1);
                self.used[y] = false;
                if !keep_going {
                    return false;
                }
            }
            true
        }
    }
    let n = view.n();
    let mut scan = Scan {
        view,
        images: vec![usize::MAX; n],
        used: vec![false; n],
        out: Vec::new(),
        cap,
    };
    scan.go(0).then_some(scan.out)
}
