use crate::error::{domain, Error, Result};
use crate::graph::{k_subsets, Edge, KGraph};

use super::matching::MatchingSearch;

/// Refuses to scan more candidate k-sets than this.
pub const SATURATE_CAP: u64 = 10_000_000;

/// Would adding `g` to the family with edges `current` (whose matching
/// number is at most `s`) create a matching of size `s + 1`?
fn addition_breaks(current: &[u64], g: u64, k: usize, s: usize, budget: u64) -> Result<bool> {
    let disjoint: Vec<u64> = current.iter().copied().filter(|&e| e & g == 0).collect();
    Ok(MatchingSearch::new(&disjoint, k, budget).reach(s)?.is_some())
}

fn check_size(f: &KGraph) -> Result<()> {
    let total = crate::binomial::binomial_u64(f.n() as u64, f.k() as u64);
    if total > SATURATE_CAP {
        return Err(domain(format!(
            "C({}, {}) = {total} candidate sets exceed the cap {SATURATE_CAP}",
            f.n(),
            f.k()
        )));
    }
    Ok(())
}

/// Extends `F` to an s-saturated family.
///
/// Non-edges are scanned once in lexicographic order and kept whenever the
/// matching number stays at most `s`. One pass suffices: a rejected set
/// completes a matching of size `s + 1` that later additions cannot remove.
pub fn saturate(f: &KGraph, s: usize, budget: u64) -> Result<KGraph> {
    check_size(f)?;
    let k = f.k();
    let mut current: Vec<u64> = f.edges().iter().map(|e| e.mask()).collect();
    if let Some(m) = MatchingSearch::new(&current, k, budget).reach(s + 1)? {
        return Err(Error::MatchingTooLarge {
            s,
            witness: m.into_iter().map(|e| Edge::from_mask(e).to_vec()).collect(),
        });
    }
    for g in k_subsets(f.n(), k) {
        if f.contains(g) {
            continue;
        }
        if !addition_breaks(&current, g.mask(), k, s, budget)? {
            // Keep lexicographic order so later matching searches can rely on it.
            let pos = current.partition_point(|&e| Edge::from_mask(e) < g);
            current.insert(pos, g.mask());
        }
    }
    Ok(KGraph::from_edges_unchecked(
        f.n(),
        k,
        current.into_iter().map(Edge::from_mask).collect(),
    ))
}

/// True iff `nu(F) <= s` and every non-edge would raise it to `s + 1`.
pub fn is_saturated(f: &KGraph, s: usize, budget: u64) -> Result<bool> {
    check_size(f)?;
    let k = f.k();
    let current: Vec<u64> = f.edges().iter().map(|e| e.mask()).collect();
    if MatchingSearch::new(&current, k, budget).reach(s + 1)?.is_some() {
        return Ok(false);
    }
    for g in k_subsets(f.n(), k) {
        if !f.contains(g) && !addition_breaks(&current, g.mask(), k, s, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{matching_number, DEFAULT_BUDGET};

    #[test]
    fn empty_graph_saturates_to_star() {
        let f = KGraph::empty(4, 2).unwrap();
        let sat = saturate(&f, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(sat.edge_lists(), vec![vec![1, 2], vec![1, 3], vec![1, 4]]);
        assert!(is_saturated(&sat, 1, DEFAULT_BUDGET).unwrap());
        assert!(!is_saturated(&f, 1, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn clique_inside_larger_universe() {
        // K^(3) on [8] inside n = 10 with s = 2: nu = 2 already.
        let f = KGraph::complete_on(10, 3, 8).unwrap();
        let sat = saturate(&f, 2, DEFAULT_BUDGET).unwrap();
        assert!(f.edges().iter().all(|&e| sat.contains(e)));
        assert!(is_saturated(&sat, 2, DEFAULT_BUDGET).unwrap());
        assert_eq!(matching_number(&sat).unwrap().value, 2);
    }

    #[test]
    fn complete_odd_graph_is_saturated() {
        let f = KGraph::complete_on(5, 2, 5).unwrap();
        assert!(is_saturated(&f, 2, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn precondition_violation_carries_witness() {
        let f = KGraph::new(6, 3, [[1, 2, 3], [4, 5, 6]]).unwrap();
        match saturate(&f, 1, DEFAULT_BUDGET) {
            Err(Error::MatchingTooLarge { s: 1, witness }) => {
                assert_eq!(witness, vec![vec![1, 2, 3], vec![4, 5, 6]]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn idempotent() {
        let f = KGraph::new(7, 3, [[2, 5, 7], [3, 4, 6]]).unwrap();
        let once = saturate(&f, 2, DEFAULT_BUDGET).unwrap();
        let twice = saturate(&once, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(once, twice);
    }
}
