//! Distinguishing labelings built outward from a root vertex.
//!
//! [`construct_thm23`] stays within `⌈Δ^(1/δ)⌉ + 1` labels when the minimum
//! degree is at least two; [`construct_thm32`] uses two labels on connected
//! `k`-regular graphs with `k ≥ 5`. Both fix the root first, then the BFS
//! layers around it in order, and both check the finished labeling exactly.
//! The procedures leave several choices open; the first attempt makes them
//! deterministically, later attempts draw them from a seeded generator, and
//! an exact search capped at the budget is the last resort.

mod bound;
mod gadget;
mod hamilton;
mod propagate;
mod thm23;
mod thm32;

pub use bound::{block_size, ceil_root, multiset_tuple_pool, multisets, paper_bound, BoundError, TuplePool};
pub use gadget::{find_pendant_gadget, label_friendship_gadget, GadgetError, GadgetKind, PendantGadget};
pub use hamilton::{find_hamiltonian_path, for_each_hamiltonian_path, HamiltonianSearch};
pub use propagate::{a_classes, layer_partition, AClass, LayerPartition};
pub use thm23::construct_thm23;
pub use thm32::construct_thm32;

use crate::aut;
use crate::graph::Graph;
use crate::labeling::{Certificate, EdgeLabeling, Method};
use crate::solver::SolverConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructConfig {
    /// Seeded retries after the deterministic attempt.
    pub repair_attempts: usize,
    /// Retry `a` (from 1) is seeded with `seed + a`.
    pub seed: u64,
    /// Budget of the exact fallback and of the small-degree branch.
    pub solver: SolverConfig,
    /// Node budget of the Hamiltonian path search.
    pub hamiltonian_nodes: u64,
}

impl Default for ConstructConfig {
    fn default() -> Self {
        ConstructConfig {
            repair_attempts: 64,
            seed: 0,
            solver: SolverConfig::default(),
            hamiltonian_nodes: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("minimum degree {0} is below 2")]
    MinDegreeBelowTwo(usize),
    #[error("graph is not regular")]
    NotRegular,
    #[error("degree {0} is below 5")]
    DegreeBelowFive(usize),
}

pub(crate) fn attempt_seed(config: &ConstructConfig, attempt: usize) -> u64 {
    config.seed.wrapping_add(attempt as u64)
}

/// Exact verdict on a complete labeling.
pub(crate) fn certify(g: &Graph, labels: alloc::vec::Vec<u32>, method: Method, seed: Option<u64>) -> Certificate {
    let labeling = EdgeLabeling::new(g, labels).expect("every edge labeled");
    let mut cert = aut::is_distinguishing(g, &labeling, method).expect("sized to the graph");
    cert.seed = seed;
    cert
}
