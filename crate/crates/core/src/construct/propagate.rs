//! Partial labelings grown outward from a root, one BFS layer at a time.
//!
//! Fixedness is tracked with colour refinement on the provisional labeling
//! (unlabeled edges read as the default label): a vertex alone in its cell
//! is fixed by every automorphism preserving that labeling. Refinement can
//! miss fixed vertices but never invents them, so the final labeling is
//! always re-checked exactly.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{BfsLayers, Graph};
use crate::refine::{histogram, LabeledView};

use super::bound::multisets;
use super::gadget::PendantGadget;

/// Candidate labelings tried per vertex before settling for a repeat.
const CANDIDATE_CAP: usize = 4096;

/// Deterministic on the first attempt, seeded afterwards.
pub(crate) struct Chooser(Option<ChaCha8Rng>);

impl Chooser {
    pub(crate) fn deterministic() -> Self {
        Chooser(None)
    }

    pub(crate) fn seeded(seed: u64) -> Self {
        Chooser(Some(ChaCha8Rng::seed_from_u64(seed)))
    }

    pub(crate) fn shuffle<T>(&mut self, items: &mut [T]) {
        if let Some(rng) = &mut self.0 {
            items.shuffle(rng);
        }
    }

    /// First item, or a uniform one once seeded.
    pub(crate) fn pick<T: Copy>(&mut self, items: &[T]) -> T {
        match &mut self.0 {
            Some(rng) => items[rng.gen_range(0..items.len())],
            None => items[0],
        }
    }
}

/// Vertices of one layer sharing the same neighbours in the layer above.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AClass {
    pub parents: Vec<usize>,
    pub members: Vec<usize>,
}

/// Partition of layer `i ≥ 1` into classes, ordered by parent set.
pub fn a_classes(g: &Graph, layers: &BfsLayers, i: usize) -> Vec<AClass> {
    let mut by_parents: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for &w in layers.layer(i) {
        let parents: Vec<usize> = g
            .neighbors(w)
            .iter()
            .copied()
            .filter(|&x| layers.depth(x) == Some(i - 1))
            .collect();
        by_parents.entry(parents).or_default().push(w);
    }
    by_parents
        .into_iter()
        .map(|(parents, members)| AClass { parents, members })
        .collect()
}

/// The root's neighbourhood cut into spoke blocks and split by how far each
/// neighbour reaches, plus the classes of every deeper layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerPartition {
    pub root: usize,
    pub block_size: usize,
    /// `L_0, L_1, …`: consecutive slices of the root's neighbours outside
    /// the pendant gadget.
    pub blocks: Vec<Vec<usize>>,
    /// Neighbours `x` with `N(x) ⊆ N[root]`.
    pub m1: Vec<usize>,
    /// The other neighbours outside the gadget.
    pub m2: Vec<usize>,
    /// Per block, the `M2` members grouped by `j = |N(x) ∩ N^(2)|`.
    pub m2_split: Vec<Vec<(usize, Vec<usize>)>>,
    /// `classes[i]` partitions layer `i`; empty for layers 0 and 1.
    pub classes: Vec<Vec<AClass>>,
}

impl LayerPartition {
    /// Blocks in the order the neighbours are listed, `M1` and each `M2_j`
    /// interleaved so no block takes more than its share of one kind.
    pub(crate) fn build(
        g: &Graph,
        layers: &BfsLayers,
        block_size: usize,
        gadget: &PendantGadget,
        chooser: &mut Chooser,
    ) -> Self {
        let root = layers.root;
        let outer: Vec<usize> = gadget.outer_vertices().collect();
        let reach = |x: usize| g.neighbors(x).iter().filter(|&&w| layers.depth(w) == Some(2)).count();
        let mut kinds: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &x in layers.layer(1).iter().filter(|x| !outer.contains(x)) {
            kinds.entry(reach(x)).or_default().push(x);
        }
        let mut queues: Vec<Vec<usize>> = kinds.values().cloned().collect();
        for q in &mut queues {
            chooser.shuffle(q);
            q.reverse();
        }
        chooser.shuffle(&mut queues);
        let mut order = Vec::new();
        while queues.iter().any(|q| !q.is_empty()) {
            for q in &mut queues {
                order.extend(q.pop());
            }
        }

        let block_size = block_size.max(1);
        let blocks: Vec<Vec<usize>> = order.chunks(block_size).map(<[usize]>::to_vec).collect();
        let (m1, m2): (Vec<usize>, Vec<usize>) = order.iter().partition(|&&x| reach(x) == 0);
        let m2_split = blocks
            .iter()
            .map(|block| {
                let mut by_j: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
                for &x in block.iter().filter(|&&x| reach(x) > 0) {
                    by_j.entry(reach(x)).or_default().push(x);
                }
                by_j.into_iter().collect()
            })
            .collect();
        let classes = (0..layers.layers.len())
            .map(|i| if i < 2 { Vec::new() } else { a_classes(g, layers, i) })
            .collect();
        LayerPartition {
            root,
            block_size,
            blocks,
            m1,
            m2,
            m2_split,
            classes,
        }
    }
}

/// Deterministic partition rooted at `root` with blocks of `block_size`.
pub fn layer_partition(g: &Graph, root: usize, block_size: usize, gadget: &PendantGadget) -> LayerPartition {
    let layers = g.bfs_layers(root).expect("root is a vertex");
    LayerPartition::build(g, &layers, block_size, gadget, &mut Chooser::deterministic())
}

/// A labeling under construction. Label 0 marks an unlabeled edge.
pub(crate) struct Builder<'g> {
    pub(crate) g: &'g Graph,
    pub(crate) layers: BfsLayers,
    pub(crate) labels: Vec<u32>,
    /// Read for unlabeled edges when checking progress, and written to
    /// whatever is left at the end.
    pub(crate) default: u32,
    /// Labels the propagation may write, preferred first.
    pub(crate) alphabet: Vec<u32>,
    /// One past the largest label that can appear.
    pub(crate) span: usize,
    pub(crate) chooser: Chooser,
}

impl<'g> Builder<'g> {
    pub(crate) fn new(g: &'g Graph, root: usize, default: u32, alphabet: Vec<u32>, span: usize, chooser: Chooser) -> Self {
        Builder {
            g,
            layers: g.bfs_layers(root).expect("root is a vertex"),
            labels: vec![0; g.m()],
            default,
            alphabet,
            span,
            chooser,
        }
    }

    #[inline]
    pub(crate) fn depth(&self, v: usize) -> usize {
        self.layers.depth(v).expect("connected")
    }

    #[inline]
    pub(crate) fn edge(&self, u: usize, v: usize) -> usize {
        self.g.edge_index(u, v).expect("edge")
    }

    /// Unlabeled edges at `x` as `(edge index, other end)`.
    pub(crate) fn free_edges(&self, x: usize) -> Vec<(usize, usize)> {
        self.g
            .neighbors(x)
            .iter()
            .map(|&w| (self.edge(x, w), w))
            .filter(|&(e, _)| self.labels[e] == 0)
            .collect()
    }

    /// Labels on the labeled edges at `x`, counted per label.
    pub(crate) fn counts(&self, x: usize) -> Vec<u32> {
        let mut c = vec![0u32; self.span];
        for &w in self.g.neighbors(x) {
            let l = self.labels[self.edge(x, w)];
            if l > 0 {
                c[l as usize] += 1;
            }
        }
        c
    }

    pub(crate) fn provisional(&self) -> Vec<u32> {
        self.labels.iter().map(|&l| if l == 0 { self.default } else { l }).collect()
    }

    pub(crate) fn colors(&self) -> Vec<u32> {
        let view = LabeledView::new(self.g, &self.provisional());
        let mut colors = view.initial_coloring();
        view.refine(&mut colors);
        colors
    }

    /// Labels every free edge at each vertex of `group`, in turn, so that
    /// the full label counts at the group's vertices differ pairwise.
    pub(crate) fn distinct_counts(&mut self, group: &[usize]) {
        let mut alphabet = self.alphabet.clone();
        self.chooser.shuffle(&mut alphabet);
        let mut seen: Vec<Vec<u32>> = Vec::with_capacity(group.len());
        for &x in group {
            let mut free = self.free_edges(x);
            self.chooser.shuffle(&mut free);
            let base = self.counts(x);
            let options = multisets(free.len(), alphabet.len(), CANDIDATE_CAP);
            let with = |choice: &[u32]| {
                let mut c = base.clone();
                for &k in choice {
                    c[alphabet[k as usize - 1] as usize] += 1;
                }
                c
            };
            let choice = options
                .iter()
                .find(|choice| !seen.contains(&with(choice)))
                .unwrap_or(&options[0]);
            for (&(e, _), &k) in free.iter().zip(choice) {
                self.labels[e] = alphabet[k as usize - 1];
            }
            seen.push(with(choice));
        }
    }

    /// Step 2 on every layer below the first.
    pub(crate) fn propagate(&mut self) {
        for i in 2..self.layers.layers.len() {
            self.layer(i);
        }
    }

    /// Gives every unlabeled edge the default label.
    pub(crate) fn finish(&mut self) {
        let default = self.default;
        self.labels.iter_mut().filter(|l| **l == 0).for_each(|l| *l = default);
    }

    fn layer(&mut self, i: usize) {
        let classes = a_classes(self.g, &self.layers, i);
        for class in classes.iter().filter(|c| c.members.len() > 1) {
            self.separate_by_parents(class);
        }
        let mut colors = self.colors();
        let single = singletons(&colors);
        let protected: Vec<usize> = (0..self.g.n()).filter(|&x| self.depth(x) < i && single[x]).collect();
        for class in &classes {
            // Each accepted step adds a cell, so this terminates; the cap
            // only bounds the work on stubborn classes.
            for _ in 0..4 * class.members.len() + 8 {
                let single = singletons(&colors);
                if class.members.iter().all(|&w| single[w]) {
                    break;
                }
                match self.corrective_step(i, class, &colors, &protected) {
                    Some(next) => colors = next,
                    None => break,
                }
            }
        }
        let leftovers: Vec<usize> = self
            .g
            .edges()
            .iter()
            .enumerate()
            .filter(|&(e, &(u, v))| self.labels[e] == 0 && self.depth(u) == i && self.depth(v) == i)
            .map(|(e, _)| e)
            .collect();
        for e in leftovers {
            self.labels[e] = self.default;
        }
    }

    /// Case 1 directly: labels the free edges from each member up to its
    /// parents so the vectors of parent-edge labels differ pairwise.
    fn separate_by_parents(&mut self, class: &AClass) {
        let mut members = class.members.clone();
        self.chooser.shuffle(&mut members);
        let mut alphabet = self.alphabet.clone();
        self.chooser.shuffle(&mut alphabet);
        let row = |b: &Self, w: usize| -> Vec<u32> { class.parents.iter().map(|&p| b.labels[b.edge(w, p)]).collect() };
        // Members already fully labeled claim their vectors first.
        let (done, open): (Vec<usize>, Vec<usize>) = members.into_iter().partition(|&w| !row(self, w).contains(&0));
        let mut seen: Vec<Vec<u32>> = done.iter().map(|&w| row(self, w)).collect();
        for w in open {
            let current = row(self, w);
            let holes: Vec<usize> = (0..current.len()).filter(|&k| current[k] == 0).collect();
            let mut digits = vec![0usize; holes.len()];
            let mut best: Option<Vec<u32>> = None;
            for _ in 0..CANDIDATE_CAP {
                let mut candidate = current.clone();
                for (&k, &d) in holes.iter().zip(&digits) {
                    candidate[k] = alphabet[d];
                }
                if best.is_none() {
                    best = Some(candidate.clone());
                }
                if !seen.contains(&candidate) {
                    best = Some(candidate);
                    break;
                }
                if !advance(&mut digits, alphabet.len()) {
                    break;
                }
            }
            let chosen = best.expect("at least one candidate");
            for &k in &holes {
                let e = self.edge(w, class.parents[k]);
                self.labels[e] = chosen[k];
            }
            seen.push(chosen);
        }
    }

    /// Tries the corrective actions in priority order and keeps the first
    /// change that refines the partition without losing a protected vertex.
    fn corrective_step(&mut self, i: usize, class: &AClass, colors: &[u32], protected: &[usize]) -> Option<Vec<u32>> {
        let before_cells = cell_count(colors);
        let before_single = self.singles_through(colors, i);
        for action in 0..5 {
            let mut candidates = self.candidates(action, i, class);
            self.chooser.shuffle(&mut candidates);
            for change in candidates {
                let saved: Vec<(usize, u32)> = change.iter().map(|&(e, _)| (e, self.labels[e])).collect();
                for &(e, l) in &change {
                    self.labels[e] = l;
                }
                let next = self.colors();
                let single = singletons(&next);
                if cell_count(&next) > before_cells
                    && protected.iter().all(|&x| single[x])
                    && self.singles_through(&next, i) >= before_single
                {
                    return Some(next);
                }
                for (e, l) in saved {
                    self.labels[e] = l;
                }
            }
        }
        None
    }

    fn singles_through(&self, colors: &[u32], i: usize) -> usize {
        let single = singletons(colors);
        (0..self.g.n()).filter(|&x| single[x] && self.depth(x) <= i).count()
    }

    /// Changes for one corrective action on `class` in layer `i`:
    /// 0 swaps two labels on a parent's edges down to layer `i`; 1 relabels
    /// one such edge; 2 labels a free edge inside layer `i` at the class;
    /// 3 a free edge from the class down to layer `i+1`; 4 a free edge
    /// inside layer `i+1` next to the class.
    fn candidates(&self, action: usize, i: usize, class: &AClass) -> Vec<Vec<(usize, u32)>> {
        let g = self.g;
        let in_class = |w: usize| class.members.binary_search(&w).is_ok();
        let mut out = Vec::new();
        match action {
            0 | 1 => {
                for &p in &class.parents {
                    let down: Vec<(usize, usize)> = g
                        .neighbors(p)
                        .iter()
                        .filter(|&&w| self.depth(w) == i)
                        .map(|&w| (self.edge(p, w), w))
                        .filter(|&(e, _)| self.labels[e] != 0)
                        .collect();
                    for (a, &(e1, w1)) in down.iter().enumerate() {
                        if action == 0 {
                            for &(e2, w2) in &down[a + 1..] {
                                let (l1, l2) = (self.labels[e1], self.labels[e2]);
                                if l1 != l2 && (in_class(w1) || in_class(w2)) {
                                    out.push(vec![(e1, l2), (e2, l1)]);
                                }
                            }
                        } else if in_class(w1) {
                            for &l in self.alphabet.iter().filter(|&&l| l != self.labels[e1]) {
                                out.push(vec![(e1, l)]);
                            }
                        }
                    }
                }
            }
            _ => {
                let near = |x: usize| g.neighbors(x).iter().any(|&w| in_class(w));
                for (e, &(u, v)) in g.edges().iter().enumerate() {
                    if self.labels[e] != 0 {
                        continue;
                    }
                    let (du, dv) = (self.depth(u), self.depth(v));
                    let wanted = match action {
                        2 => du == i && dv == i && (in_class(u) || in_class(v)),
                        3 => (du == i && dv == i + 1 && in_class(u)) || (dv == i && du == i + 1 && in_class(v)),
                        _ => du == i + 1 && dv == i + 1 && (near(u) || near(v)),
                    };
                    if wanted {
                        for &l in self.alphabet.iter().filter(|&&l| l != self.default) {
                            out.push(vec![(e, l)]);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Writes the gadget's labels, if there is a gadget.
pub(crate) fn apply_gadget(builder: &mut Builder, gadget: &PendantGadget, zero_label: u32) {
    if let Ok(pairs) = super::gadget::label_friendship_gadget(builder.g, gadget, zero_label) {
        for (e, l) in pairs {
            builder.labels[e] = l;
        }
    }
}

fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

pub(crate) fn singletons(colors: &[u32]) -> Vec<bool> {
    let h = histogram(colors);
    colors.iter().map(|&c| h[c as usize] == 1).collect()
}

fn cell_count(colors: &[u32]) -> usize {
    colors.iter().copied().max().map_or(0, |c| c as usize + 1)
}
