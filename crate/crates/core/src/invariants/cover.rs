use crate::error::{Error, Result};
use crate::graph::{Edge, KGraph};

use super::{InvariantResult, Witness};

struct CoverSearch<'a> {
    edges: &'a [u64],
    budget: u64,
    nodes: u64,
    best: u64,
}

impl CoverSearch<'_> {
    /// Branches on the vertices of the lexicographically smallest uncovered
    /// edge, in ascending order. A greedy disjoint family among the uncovered
    /// edges bounds the remaining cover size from below.
    fn dfs(&mut self, cover: u64, uncovered: &[u64]) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExhausted {
                budget: self.budget,
            });
        }
        let size = cover.count_ones();
        let Some(&first) = uncovered.first() else {
            if size < self.best.count_ones() {
                self.best = cover;
            }
            return Ok(());
        };
        let mut used = 0u64;
        let mut disjoint = 0u32;
        for &e in uncovered {
            if e & used == 0 {
                used |= e;
                disjoint += 1;
            }
        }
        if size + disjoint >= self.best.count_ones() {
            return Ok(());
        }
        let mut child = Vec::with_capacity(uncovered.len());
        let mut rest = first;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            child.clear();
            child.extend(uncovered.iter().copied().filter(|&e| e & bit == 0));
            self.dfs(cover | bit, &child)?;
        }
        Ok(())
    }
}

/// Repeatedly takes a vertex of maximum degree among uncovered edges,
/// smallest label on ties.
fn greedy_cover(edges: &[u64], n: usize) -> u64 {
    let mut cover = 0u64;
    let mut left: Vec<u64> = edges.to_vec();
    while !left.is_empty() {
        let mut deg = vec![0usize; n];
        for &e in &left {
            let mut m = e;
            while m != 0 {
                deg[m.trailing_zeros() as usize] += 1;
                m &= m - 1;
            }
        }
        let (v, _) = deg
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
            .expect("non-empty");
        cover |= 1 << v;
        left.retain(|&e| e & (1 << v) == 0);
    }
    cover
}

/// `tau(F)` with a minimum vertex cover as witness.
pub fn vertex_cover_number_with(f: &KGraph, budget: u64) -> Result<InvariantResult> {
    let edges: Vec<u64> = f.edges().iter().map(|e| e.mask()).collect();
    let mut search = CoverSearch {
        edges: &edges,
        budget,
        nodes: 0,
        best: greedy_cover(&edges, f.n()),
    };
    search.dfs(0, search.edges)?;
    let cover = Edge::from_mask(search.best);
    Ok(InvariantResult {
        value: cover.len(),
        witness: Witness::Vertices(cover.to_vec()),
        node_count: search.nodes,
    })
}
