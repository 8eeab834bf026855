//! Edge labelings and the certificates that vouch for them.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LabelingError {
    #[error("labeling has {got} entries but the graph has {expected} edges")]
    WrongLength { expected: usize, got: usize },
    #[error("edge ({u}, {v}) is unlabeled")]
    UnlabeledEdge { u: usize, v: usize },
}

/// Labels indexed by canonical edge order; every label is at least 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeLabeling {
    labels: Vec<u32>,
}

impl EdgeLabeling {
    /// A `0` entry marks an unlabeled edge and is rejected.
    pub fn new(g: &Graph, labels: Vec<u32>) -> Result<Self, LabelingError> {
        if labels.len() != g.m() {
            return Err(LabelingError::WrongLength {
                expected: g.m(),
                got: labels.len(),
            });
        }
        if let Some(i) = labels.iter().position(|&l| l == 0) {
            let (u, v) = g.edges()[i];
            return Err(LabelingError::UnlabeledEdge { u, v });
        }
        Ok(EdgeLabeling { labels })
    }

    pub fn constant(g: &Graph, label: u32) -> Self {
        assert!(label > 0, "labels are positive");
        EdgeLabeling {
            labels: alloc::vec![label; g.m()],
        }
    }

    #[inline]
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Number of distinct labels in use.
    pub fn label_count(&self) -> usize {
        self.labels.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn max_label(&self) -> u32 {
        self.labels.iter().copied().max().unwrap_or(0)
    }

    pub fn label_of(&self, g: &Graph, u: usize, v: usize) -> Option<u32> {
        g.edge_index(u, v).map(|i| self.labels[i])
    }

    /// True when `p` maps every edge onto an edge with the same label.
    pub fn is_preserved_by(&self, g: &Graph, p: &Permutation) -> bool {
        p.len() == g.n()
            && g.edges().iter().zip(&self.labels).all(|(&(u, v), &l)| {
                g.edge_index(p.apply(u), p.apply(v))
                    .is_some_and(|j| self.labels[j] == l)
            })
    }
}

/// The procedure that produced a labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ExactSearch,
    /// Root-vertex construction bounded by `⌈Δ^(1/δ)⌉ + 1`.
    DegreeBound,
    /// Two-label construction for regular graphs of degree at least 5.
    RegularTwoLabel,
    FamilyFormula,
    /// Constructive path failed; the labeling came from a capped exact search.
    Repair,
}

impl Method {
    /// Wire tag used in certificate JSON.
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ExactSearch => "exact-search",
            Method::DegreeBound => "theorem-2.3",
            Method::RegularTwoLabel => "theorem-3.2",
            Method::FamilyFormula => "family-formula",
            Method::Repair => "repair",
        }
    }

    pub fn parse(tag: &str) -> Option<Method> {
        [
            Method::ExactSearch,
            Method::DegreeBound,
            Method::RegularTwoLabel,
            Method::FamilyFormula,
            Method::Repair,
        ]
        .into_iter()
        .find(|m| m.as_str() == tag)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertificateError {
    #[error("labeling does not match the graph: {0}")]
    Labeling(#[from] LabelingError),
    #[error("distinguishing certificate carries a witness")]
    UnexpectedWitness,
    #[error("non-distinguishing certificate has no witness")]
    MissingWitness,
    #[error("witness is not an automorphism of the graph")]
    WitnessNotAutomorphism,
    #[error("witness is the identity")]
    WitnessIsIdentity,
    #[error("witness does not preserve the labeling")]
    WitnessBreaksLabeling,
    #[error("labeling is preserved by a nontrivial automorphism")]
    NotDistinguishing,
}

/// A labeling together with a checkable verdict.
///
/// When `distinguishing` is false the witness is a nontrivial automorphism
/// preserving every label; when true there is no witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub labeling: EdgeLabeling,
    pub distinguishing: bool,
    pub witness: Option<Permutation>,
    pub method: Method,
    /// Seed of the randomized attempt that produced the labeling, if any.
    pub seed: Option<u64>,
}

impl Certificate {
    pub fn label_count(&self) -> usize {
        self.labeling.label_count()
    }

    /// Re-checks the verdict from scratch against `g`.
    ///
    /// A negative verdict is checked through its witness alone; a positive
    /// verdict is re-decided with an independent automorphism search.
    pub fn verify(&self, g: &Graph) -> Result<(), CertificateError> {
        let labeling = EdgeLabeling::new(g, self.labeling.labels().to_vec())?;
        match (&self.witness, self.distinguishing) {
            (Some(_), true) => Err(CertificateError::UnexpectedWitness),
            (None, false) => Err(CertificateError::MissingWitness),
            (Some(w), false) => {
                if !crate::aut::is_automorphism(g, w).unwrap_or(false) {
                    Err(CertificateError::WitnessNotAutomorphism)
                } else if w.is_identity() {
                    Err(CertificateError::WitnessIsIdentity)
                } else if !labeling.is_preserved_by(g, w) {
                    Err(CertificateError::WitnessBreaksLabeling)
                } else {
                    Ok(())
                }
            }
            (None, true) => match crate::aut::find_label_preserving(g, labeling.labels()) {
                Some(_) => Err(CertificateError::NotDistinguishing),
                None => Ok(()),
            },
        }
    }
}
