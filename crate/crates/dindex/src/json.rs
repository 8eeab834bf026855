//! JSON forms of certificates and exact-solver results.

use dindex_core::labeling::{Certificate, CertificateError, EdgeLabeling, LabelingError, Method};
use dindex_core::perm::{Permutation, PermutationError};
use dindex_core::solver::{SolveResult, SolveStats};
use dindex_core::Graph;
use serde::{Deserialize, Serialize};

use crate::graph6::{parse_graph6, write_graph6, Graph6Error};

/// A certificate with its graph; labels follow the graph's sorted edge order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub graph6: String,
    pub labels: Vec<u32>,
    pub distinguishing: bool,
    /// Images of a nontrivial label-preserving automorphism.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    pub method: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Debug, thiserror::Error)]
pub enum CertificateJsonError {
    #[error("bad graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error("bad labels: {0}")]
    Labels(#[from] LabelingError),
    #[error("bad witness: {0}")]
    Witness(#[from] PermutationError),
    #[error("unknown method tag {0:?}")]
    Method(String),
    #[error("certificate rejected: {0}")]
    Rejected(#[from] CertificateError),
}

impl CertificateJson {
    pub fn new(g: &Graph, cert: &Certificate) -> Self {
        CertificateJson {
            graph6: write_graph6(g),
            labels: cert.labeling.labels().to_vec(),
            distinguishing: cert.distinguishing,
            witness: cert.witness.as_ref().map(|w| w.images().to_vec()),
            method: cert.method.as_str().to_string(),
            seed: cert.seed,
        }
    }

    /// Rebuilds the graph and certificate without checking the verdict.
    pub fn decode(&self) -> Result<(Graph, Certificate), CertificateJsonError> {
        let g = parse_graph6(&self.graph6)?;
        let labeling = EdgeLabeling::new(&g, self.labels.clone())?;
        let witness = self.witness.clone().map(Permutation::from_images).transpose()?;
        let method = Method::parse(&self.method).ok_or_else(|| CertificateJsonError::Method(self.method.clone()))?;
        let cert = Certificate {
            labeling,
            distinguishing: self.distinguishing,
            witness,
            method,
            seed: self.seed,
        };
        Ok((g, cert))
    }

    /// Decodes and re-checks the verdict from scratch.
    pub fn verify(&self) -> Result<(Graph, Certificate), CertificateJsonError> {
        let (g, cert) = self.decode()?;
        cert.verify(&g)?;
        Ok((g, cert))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsJson {
    pub nodes: u64,
    pub elapsed_ms: u64,
}

impl From<SolveStats> for StatsJson {
    fn from(s: SolveStats) -> Self {
        StatsJson {
            nodes: s.nodes,
            elapsed_ms: s.elapsed_ms,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResultJson {
    pub graph6: String,
    pub dprime: usize,
    pub certificate: CertificateJson,
    pub stats: StatsJson,
}

impl SolveResultJson {
    pub fn new(g: &Graph, r: &SolveResult) -> Self {
        SolveResultJson {
            graph6: write_graph6(g),
            dprime: r.dprime,
            certificate: CertificateJson::new(g, &r.certificate),
            stats: r.stats.into(),
        }
    }
}
