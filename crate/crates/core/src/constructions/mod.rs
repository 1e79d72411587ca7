//! Explicit witness graphs for every lower bound, each shipped with a
//! certificate whose checks are re-run through [`crate::patterns`].

mod clique;
mod hamilton;
mod tree;
mod zero;

use serde::Serialize;

use crate::formulas::{Advisory, CaseTag, RegexResult};
use crate::graph::{degree_profile, Graph};
use crate::graph6::encode_graph6;
use crate::patterns::{find_forbidden, Embedding, Forbidden};

pub use crate::graph::{remove_edge_set, RemovalPlan};
pub use clique::{clique_removal_plan, clique_witness, CliquePlan};
pub use hamilton::{hamiltonian_cycle, is_hamiltonian_cycle, multipartite_matching};
pub use tree::{decompose, regular_graph, tree_witness, Decomposition};
pub use zero::zero_witness;

/// A witness graph with its regularity and freeness checks evaluated.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessCertificate {
    pub n: usize,
    pub claimed_degree: usize,
    pub forbidden: String,
    pub case_tag: Option<CaseTag>,
    pub regular: bool,
    pub free: bool,
    pub valid: bool,
    pub graph6: String,
    #[serde(skip)]
    pub graph: Graph,
    /// Copy of the forbidden pattern, when the freeness check failed.
    #[serde(skip)]
    pub found_copy: Option<Embedding>,
}

impl WitnessCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serialises")
    }
}

/// Checks that `g` is `d`-regular and free of `forbidden`. A failing graph
/// yields a certificate with `valid = false`, never an error.
pub fn verify(g: &Graph, forbidden: &Forbidden, d: usize) -> WitnessCertificate {
    let profile = degree_profile(g);
    let regular = profile.degree == Some(d);
    let found_copy = find_forbidden(g, forbidden);
    let free = found_copy.is_none();
    WitnessCertificate {
        n: g.vertex_count(),
        claimed_degree: d,
        forbidden: forbidden.to_string(),
        case_tag: None,
        regular,
        free,
        valid: regular && free,
        graph6: encode_graph6(g),
        graph: g.clone(),
        found_copy,
    }
}

/// Upgrades a formula value to a certified lower bound when a witness for
/// exactly that value was built and verified.
pub fn certify(mut result: RegexResult, cert: &WitnessCertificate) -> RegexResult {
    if cert.valid && cert.claimed_degree == result.value && cert.n == result.n {
        result.advisory = Advisory::CertifiedLowerBound;
    }
    result
}
