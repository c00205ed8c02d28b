#![allow(dead_code)]

use matchlab::graph::k_subsets;
use matchlab::{Edge, KGraph};
use proptest::prelude::*;

/// A random k-graph with `k` in `ks`, `n` in `k..=max_n`, and each k-set kept
/// with a random probability.
pub fn graph(ks: std::ops::RangeInclusive<usize>, max_n: usize) -> impl Strategy<Value = KGraph> {
    ks.prop_flat_map(move |k| (Just(k), k..=max_n))
        .prop_flat_map(|(k, n)| {
            let m = k_subsets(n, k).count();
            (Just(n), Just(k), proptest::collection::vec(any::<bool>(), m))
        })
        .prop_map(|(n, k, keep)| {
            let edges: Vec<Edge> = k_subsets(n, k)
                .zip(keep)
                .filter_map(|(e, b)| b.then_some(e))
                .collect();
            KGraph::from_edges(n, k, edges).unwrap()
        })
}

/// A random k-graph with at most `max_edges` edges.
pub fn sparse_graph(max_n: usize, max_edges: usize) -> impl Strategy<Value = KGraph> {
    (2usize..=4)
        .prop_flat_map(move |k| (Just(k), k..=max_n))
        .prop_flat_map(move |(k, n)| {
            let m = k_subsets(n, k).count();
            (Just(n), Just(k), proptest::sample::subsequence((0..m).collect::<Vec<_>>(), 0..=max_edges.min(m)))
        })
        .prop_map(|(n, k, picks)| {
            let all: Vec<Edge> = k_subsets(n, k).collect();
            KGraph::from_edges(n, k, picks.into_iter().map(|i| all[i]).collect()).unwrap()
        })
}

/// Maximum matching by trying every subset of edges (`|F| <= 20`).
pub fn naive_nu(f: &KGraph) -> usize {
    let masks: Vec<u64> = f.edges().iter().map(|e| e.mask()).collect();
    assert!(masks.len() <= 20);
    (0u32..1 << masks.len())
        .filter_map(|sub| {
            let mut union = 0u64;
            for (i, &e) in masks.iter().enumerate() {
                if sub >> i & 1 == 1 {
                    if union & e != 0 {
                        return None;
                    }
                    union |= e;
                }
            }
            Some(sub.count_ones() as usize)
        })
        .max()
        .unwrap_or(0)
}

pub fn binom(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    (0..r).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
