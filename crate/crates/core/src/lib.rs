//! Distinguishing edge labelings of finite simple graphs.
//!
//! An edge labeling is *distinguishing* when the only automorphism of the
//! graph that preserves every edge label is the identity. The least number
//! of labels for which such a labeling exists is the distinguishing index
//! `D'(G)`.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised as:
//!
//! * [`graph`]: dense-vertex simple graphs, degree statistics, BFS layers.
//! * [`perm`] and [`aut`]: permutations, automorphism groups of plain and
//!   edge-labeled graphs, and the distinguishing check that produces a
//!   [`Certificate`].
//! * [`solver`]: the exact index by label-assignment search, plus an
//!   unpruned brute-force oracle.
//! * [`construct`]: labelings built layer by layer from a root vertex that
//!   stay within `⌈Δ^(1/δ)⌉ + 1` labels (minimum degree at least two) or two
//!   labels (connected `k`-regular, `k ≥ 5`).
//! * [`families`]: generators for paths, cycles, complete and complete
//!   bipartite graphs, friendship graphs and random regular graphs, with
//!   their closed-form indices.
//!
//! Time is abstracted behind [`solver::Clock`] so budgets work without `std`.
#![no_std]

extern crate alloc;

pub mod aut;
pub mod construct;
pub mod families;
pub mod graph;
pub mod labeling;
pub mod perm;
mod refine;
pub mod solver;

pub use aut::{automorphism_group, edge_orbits, is_automorphism, is_distinguishing, AutGroup};
pub use graph::{BfsLayers, DegreeStats, Graph, GraphError};
pub use labeling::{Certificate, EdgeLabeling, LabelingError, Method};
pub use perm::Permutation;
