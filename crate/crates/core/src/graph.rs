//! Simple undirected graphs on dense vertex sets `0..n`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

/// Vertex count accepted by [`Graph::new`].
pub const DEFAULT_MAX_VERTICES: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    NoSuchVertex { vertex: usize, n: usize },
    #[error("{n} vertices exceeds the limit of {limit}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("graph is disconnected")]
    Disconnected,
}

/// An immutable simple graph.
///
/// Adjacency is held twice: as bit rows for O(1) edge queries and as sorted
/// neighbour lists for iteration. Edges are kept as `(u, v)` with `u < v`,
/// sorted lexicographically; an edge's position in that list is its
/// canonical index, which labelings use.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    neighbors: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph, collapsing duplicate and reversed pairs.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::with_limit(n, pairs, DEFAULT_MAX_VERTICES)
    }

    pub fn with_limit(n: usize, pairs: &[(usize, usize)], limit: usize) -> Result<Self, GraphError> {
        if n > limit {
            return Err(GraphError::TooManyVertices { n, limit });
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push(if u < v { (u, v) } else { (v, u) });
        }
        edges.sort_unstable();
        edges.dedup();

        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &edges {
            rows[u * words + v / 64] |= 1 << (v % 64);
            rows[v * words + u / 64] |= 1 << (u % 64);
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            words,
            rows,
            neighbors,
            edges,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list.
    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] & (1 << (v % 64)) != 0
    }

    /// Sorted neighbours of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Canonical index of the edge `{u, v}`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let min = degrees.iter().copied().min().unwrap_or(0);
        let max = degrees.iter().copied().max().unwrap_or(0);
        DegreeStats {
            regular: (min == max).then_some(min),
            degrees,
            min,
            max,
        }
    }

    pub fn bfs_layers(&self, root: usize) -> Result<BfsLayers, GraphError> {
        if root >= self.n {
            return Err(GraphError::NoSuchVertex {
                vertex: root,
                n: self.n,
            });
        }
        let mut depth = vec![None; self.n];
        let mut layers: Vec<Vec<usize>> = vec![vec![root]];
        depth[root] = Some(0);
        loop {
            let next_depth = layers.len();
            let mut next = Vec::new();
            for &u in &layers[next_depth - 1] {
                for &w in &self.neighbors[u] {
                    if depth[w].is_none() {
                        depth[w] = Some(next_depth);
                        next.push(w);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort_unstable();
            layers.push(next);
        }
        Ok(BfsLayers {
            root,
            eccentricity: layers.len() - 1,
            layers,
            depth,
        })
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.neighbors[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// Greatest distance between two vertices. Errors on disconnected graphs.
    pub fn diameter(&self) -> Result<usize, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let mut best = 0;
        for v in 0..self.n {
            best = best.max(self.bfs_layers(v)?.eccentricity);
        }
        Ok(best)
    }

    /// Connected, at least three vertices and no cut vertex.
    pub fn is_biconnected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        // Iterative Tarjan low-link from vertex 0.
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0usize; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut next_child = vec![0usize; self.n];
        let mut root_children = 0;
        let mut time = 0;
        let mut stack = vec![0usize];
        disc[0] = 0;
        low[0] = 0;
        while let Some(&u) = stack.last() {
            if next_child[u] < self.neighbors[u].len() {
                let w = self.neighbors[u][next_child[u]];
                next_child[u] += 1;
                if disc[w] == usize::MAX {
                    time += 1;
                    disc[w] = time;
                    low[w] = time;
                    parent[w] = u;
                    if u == 0 {
                        root_children += 1;
                    }
                    stack.push(w);
                } else if w != parent[u] {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                let p = parent[u];
                if p != usize::MAX {
                    low[p] = low[p].min(low[u]);
                    if p != 0 && low[u] >= disc[p] {
                        return false;
                    }
                }
            }
        }
        root_children < 2
    }

    /// Graph with vertices renamed by `images` (`v` becomes `images[v]`).
    pub fn relabeled(&self, images: &[usize]) -> Graph {
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|&(u, v)| (images[u], images[v])).collect();
        Graph::with_limit(self.n, &pairs, usize::MAX).expect("relabeling preserves validity")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub degrees: Vec<usize>,
    /// Minimum degree δ.
    pub min: usize,
    /// Maximum degree Δ.
    pub max: usize,
    /// `Some(k)` when every vertex has degree `k`.
    pub regular: Option<usize>,
}

/// Distance layers around a root vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsLayers {
    pub root: usize,
    /// `layers[i]` holds the vertices at distance `i` from the root, sorted.
    pub layers: Vec<Vec<usize>>,
    pub eccentricity: usize,
    depth: Vec<Option<usize>>,
}

impl BfsLayers {
    /// Distance from the root, `None` outside the root's component.
    #[inline]
    pub fn depth(&self, v: usize) -> Option<usize> {
        self.depth[v]
    }

    pub fn layer(&self, i: usize) -> &[usize] {
        self.layers.get(i).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }
}
