//! Exact matching number, vertex cover number, clique number, and
//! s-saturation.
//!
//! All searches are deterministic: branch order and tie-breaks are fixed, so
//! the same input always yields the same witness and node count. Every search
//! runs against a node budget; running out is reported as
//! [`Error::BudgetExhausted`](crate::Error::BudgetExhausted), never as an
//! approximate value.

mod clique;
mod cover;
mod matching;
mod saturation;

pub use clique::clique_number_with;
pub use cover::vertex_cover_number_with;
pub use matching::{find_matching_of_size, matching_number_with};
pub(crate) use matching::MatchingSearch;
pub use saturation::{is_saturated, saturate};

use crate::error::Result;
use crate::graph::{Edge, KGraph};

/// Default node budget for every exact search.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// What certifies an invariant value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Pairwise-disjoint edges (matching number).
    Edges(Vec<Edge>),
    /// A vertex set (cover or clique).
    Vertices(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantResult {
    pub value: usize,
    pub witness: Witness,
    pub node_count: u64,
}

impl InvariantResult {
    pub fn witness_edges(&self) -> &[Edge] {
        match &self.witness {
            Witness::Edges(e) => e,
            Witness::Vertices(_) => &[],
        }
    }

    pub fn witness_vertices(&self) -> &[usize] {
        match &self.witness {
            Witness::Vertices(v) => v,
            Witness::Edges(_) => &[],
        }
    }
}

/// `nu(F)` with the default budget.
pub fn matching_number(f: &KGraph) -> Result<InvariantResult> {
    matching_number_with(f, DEFAULT_BUDGET)
}

/// `tau(F)` with the default budget.
pub fn vertex_cover_number(f: &KGraph) -> Result<InvariantResult> {
    vertex_cover_number_with(f, DEFAULT_BUDGET)
}

/// `omega(F)` with the default budget.
pub fn clique_number(f: &KGraph) -> Result<InvariantResult> {
    clique_number_with(f, DEFAULT_BUDGET)
}
