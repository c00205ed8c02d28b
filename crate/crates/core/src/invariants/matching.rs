use crate::error::{Error, Result};
use crate::graph::{Edge, KGraph};

use super::{InvariantResult, Witness};

/// Exact maximum matching by branch and bound.
///
/// The branching is include/exclude on the lexicographically smallest
/// remaining edge. Every edge sharing that edge's minimum vertex `v` sits in
/// a contiguous prefix of the remaining list, so a run of exclusions is
/// rolled into one "`v` stays unmatched" child. Upper bounds per node:
/// the remaining edge count, `floor(|covered vertices| / k)`, and the number
/// of classes in a first-fit partition of the remaining edges into pairwise
/// intersecting classes (a matching uses at most one edge per class).
pub(crate) struct MatchingSearch<'a> {
    edges: &'a [u64],
    k: usize,
    budget: u64,
    nodes: u64,
    stack: Vec<u64>,
    best: Vec<u64>,
    stop_at: usize,
    floor: usize,
}

impl<'a> MatchingSearch<'a> {
    /// `edges` must be lexicographically sorted vertex masks of size `k`.
    pub(crate) fn new(edges: &'a [u64], k: usize, budget: u64) -> Self {
        MatchingSearch {
            edges,
            k,
            budget,
            nodes: 0,
            stack: Vec::new(),
            best: Vec::new(),
            stop_at: usize::MAX,
            floor: 0,
        }
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes
    }

    /// A maximum matching.
    pub(crate) fn maximum(&mut self) -> Result<Vec<u64>> {
        self.best = greedy(self.edges);
        self.run()?;
        Ok(self.best.clone())
    }

    /// Some matching with exactly `target` edges, if one exists.
    pub(crate) fn reach(&mut self, target: usize) -> Result<Option<Vec<u64>>> {
        if target == 0 {
            return Ok(Some(Vec::new()));
        }
        let mut g = greedy(self.edges);
        if g.len() >= target {
            g.truncate(target);
            return Ok(Some(g));
        }
        self.best = g;
        self.stop_at = target;
        self.floor = target - 1;
        self.run()?;
        Ok((self.best.len() >= target).then(|| self.best[..target].to_vec()))
    }

    fn run(&mut self) -> Result<()> {
        let all: Vec<u32> = (0..self.edges.len() as u32).collect();
        self.dfs(&all).map(|_| ())
    }

    /// Returns `Ok(true)` once the stop size has been reached.
    fn dfs(&mut self, rem: &[u32]) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExhausted {
                budget: self.budget,
            });
        }
        if self.stack.len() > self.best.len() {
            self.best.clone_from(&self.stack);
            if self.best.len() >= self.stop_at {
                return Ok(true);
            }
        }
        if rem.is_empty() {
            return Ok(false);
        }
        let need = self.best.len().max(self.floor) - self.stack.len();
        if rem.len() <= need {
            return Ok(false);
        }
        let union = rem.iter().fold(0u64, |acc, &i| acc | self.edges[i as usize]);
        if union.count_ones() as usize / self.k <= need {
            return Ok(false);
        }
        if intersecting_classes(self.edges, rem, need) <= need {
            return Ok(false);
        }

        let first = self.edges[rem[0] as usize];
        let vbit = first & first.wrapping_neg();
        let split = rem
            .iter()
            .position(|&i| self.edges[i as usize] & vbit == 0)
            .unwrap_or(rem.len());
        let (prefix, rest) = rem.split_at(split);
        let mut child = Vec::with_capacity(rest.len());
        for &i in prefix {
            let e = self.edges[i as usize];
            child.clear();
            child.extend(rest.iter().copied().filter(|&j| self.edges[j as usize] & e == 0));
            self.stack.push(e);
            let stop = self.dfs(&child)?;
            self.stack.pop();
            if stop {
                return Ok(true);
            }
        }
        self.dfs(rest)
    }
}

fn greedy(edges: &[u64]) -> Vec<u64> {
    let mut used = 0u64;
    let mut out = Vec::new();
    for &e in edges {
        if e & used == 0 {
            used |= e;
            out.push(e);
        }
    }
    out
}

/// First-fit partition of `rem` into pairwise-intersecting classes. Stops
/// counting once the count exceeds `cap`.
fn intersecting_classes(edges: &[u64], rem: &[u32], cap: usize) -> usize {
    let mut classes: Vec<Vec<u64>> = Vec::new();
    'edges: for &i in rem {
        let e = edges[i as usize];
        for class in classes.iter_mut() {
            if class.iter().all(|&f| f & e != 0) {
                class.push(e);
                continue 'edges;
            }
        }
        if classes.len() == cap {
            return cap + 1;
        }
        classes.push(vec![e]);
    }
    classes.len()
}

fn masks(f: &KGraph) -> Vec<u64> {
    f.edges().iter().map(|e| e.mask()).collect()
}

/// `nu(F)` with a maximum matching as witness.
pub fn matching_number_with(f: &KGraph, budget: u64) -> Result<InvariantResult> {
    let edges = masks(f);
    let mut search = MatchingSearch::new(&edges, f.k(), budget);
    let best = search.maximum()?;
    Ok(InvariantResult {
        value: best.len(),
        witness: Witness::Edges(best.into_iter().map(Edge::from_mask).collect()),
        node_count: search.nodes(),
    })
}

/// A matching of exactly `target` edges, or `None` when `nu(F) < target`.
pub fn find_matching_of_size(f: &KGraph, target: usize, budget: u64) -> Result<Option<Vec<Edge>>> {
    let edges = masks(f);
    let found = MatchingSearch::new(&edges, f.k(), budget).reach(target)?;
    Ok(found.map(|m| m.into_iter().map(Edge::from_mask).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::k_subsets;
    use crate::invariants::DEFAULT_BUDGET;

    fn nu(f: &KGraph) -> usize {
        let r = matching_number_with(f, DEFAULT_BUDGET).unwrap();
        let w = r.witness_edges();
        assert_eq!(w.len(), r.value);
        for (i, a) in w.iter().enumerate() {
            assert!(f.contains(*a));
            for b in &w[i + 1..] {
                assert!(a.is_disjoint(*b));
            }
        }
        r.value
    }

    #[test]
    fn disjoint_pair() {
        let f = KGraph::new(6, 3, [[1, 2, 3], [4, 5, 6]]).unwrap();
        assert_eq!(nu(&f), 2);
    }

    #[test]
    fn empty_and_complete() {
        assert_eq!(nu(&KGraph::empty(5, 2).unwrap()), 0);
        for n in 3..=10 {
            let f = KGraph::complete_on(n, 3, n).unwrap();
            assert_eq!(nu(&f), n / 3);
        }
    }

    #[test]
    fn budget_is_reported() {
        // Greedy takes 12 and stalls; the optimum 13, 24 needs branching.
        let f = KGraph::new(4, 2, [[1, 2], [1, 3], [2, 4]]).unwrap();
        assert!(matches!(
            matching_number_with(&f, 1),
            Err(Error::BudgetExhausted { budget: 1 })
        ));
    }

    #[test]
    fn reach_targets() {
        let f = KGraph::complete_on(9, 3, 8).unwrap();
        assert_eq!(find_matching_of_size(&f, 2, DEFAULT_BUDGET).unwrap().unwrap().len(), 2);
        assert!(find_matching_of_size(&f, 3, DEFAULT_BUDGET).unwrap().is_none());
        assert_eq!(find_matching_of_size(&f, 0, DEFAULT_BUDGET).unwrap(), Some(vec![]));
    }

    #[test]
    fn star_plus_far_edges() {
        // All 3-sets meeting {1,2} on 9 points: nu = 2.
        let edges: Vec<Edge> = k_subsets(9, 3).filter(|e| e.mask() & 0b11 != 0).collect();
        let f = KGraph::from_edges(9, 3, edges).unwrap();
        assert_eq!(nu(&f), 2);
    }
}
