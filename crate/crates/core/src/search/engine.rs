//! Depth-first include/exclude search over the k-subsets of `[n]` in
//! lexicographic order, include branch first.
//!
//! A node holds the chosen edges and the candidate set: later edges that can
//! still be added without creating a matching of size `s + 1` (and, in
//! shifted mode, whose lower covers are all chosen or still candidates).
//! Because candidates are filtered eagerly, every leaf is a valid family.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::Result;
use crate::graph::{k_subsets, prefix_mask, Edge};
use crate::invariants::{MatchingSearch, DEFAULT_BUDGET};

use super::bits::Bits;

/// Number of leading branching decisions expanded before handing subtrees
/// to worker threads.
const SPLIT_DEPTH: usize = 8;

pub(crate) struct Space<const W: usize> {
    k: usize,
    s: usize,
    universe: u64,
    nontrivial: bool,
    shifted: bool,
    masks: Vec<u64>,
    disjoint: Vec<Bits<W>>,
    lower: Vec<Vec<usize>>,
}

#[derive(Clone, Copy)]
struct Node<const W: usize> {
    chosen: Bits<W>,
    count: usize,
    cand: Bits<W>,
}

pub(crate) struct Outcome {
    pub best: Option<Vec<Edge>>,
    pub nodes: u64,
    pub exhaustive: bool,
}

impl<const W: usize> Space<W> {
    pub fn new(n: usize, k: usize, s: usize, nontrivial: bool, shifted: bool) -> Self {
        let edges: Vec<Edge> = k_subsets(n, k).collect();
        assert!(edges.len() <= Bits::<W>::CAPACITY);
        let masks: Vec<u64> = edges.iter().map(|e| e.mask()).collect();
        let index: HashMap<u64, usize> = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let disjoint = masks
            .iter()
            .map(|&a| {
                let mut b = Bits::empty();
                for (j, &m) in masks.iter().enumerate() {
                    if a & m == 0 {
                        b.set(j);
                    }
                }
                b
            })
            .collect();
        // Lower covers: lower one vertex by one where the result is a k-set.
        let lower = masks
            .iter()
            .map(|&m| {
                Edge::from_mask(m)
                    .vertices()
                    .filter(|&v| v > 1 && m & (1 << (v - 2)) == 0)
                    .map(|v| index[&(m & !(1 << (v - 1)) | 1 << (v - 2))])
                    .collect()
            })
            .collect();
        Space {
            k,
            s,
            universe: prefix_mask(n),
            nontrivial,
            shifted,
            masks,
            disjoint,
            lower,
        }
    }

    /// Searches for the lexicographically least family of maximum size, at
    /// least `floor` edges. With `s >= 1` the first edge `[k]` is forced.
    pub fn run(&self, floor: usize, budget: u64) -> Result<Outcome> {
        let m = self.masks.len();
        let root = if self.s == 0 {
            Node {
                chosen: Bits::empty(),
                count: 0,
                cand: Bits::empty(),
            }
        } else {
            let cand = self.include(&Bits::empty(), Bits::prefix(m).without(0), 0)?;
            Node {
                chosen: Bits::empty().with(0),
                count: 1,
                cand,
            }
        };

        let mut roots = Vec::new();
        let mut split_nodes = 0u64;
        self.split(root, SPLIT_DEPTH, floor, &mut roots, &mut split_nodes)?;

        let results: Vec<Result<Worker<W>>> = roots
            .par_iter()
            .map(|&node| {
                let mut w = Worker {
                    space: self,
                    cap: budget,
                    nodes: 0,
                    bar: floor,
                    best: None,
                    hit_cap: false,
                };
                w.dfs(node)?;
                Ok(w)
            })
            .collect();

        let mut nodes = split_nodes;
        let mut exhaustive = true;
        let mut best: Option<(usize, Bits<W>)> = None;
        for r in results {
            let w = r?;
            nodes = nodes.saturating_add(w.nodes);
            exhaustive &= !w.hit_cap;
            if let Some(b) = w.best {
                if best.is_none_or(|(c, _)| b.0 > c) {
                    best = Some(b);
                }
            }
        }
        exhaustive &= nodes <= budget;
        Ok(Outcome {
            best: best.map(|(_, bits)| bits.ones().map(|i| Edge::from_mask(self.masks[i])).collect()),
            nodes,
            exhaustive,
        })
    }

    /// Expands the first `depth` branching levels in search order, without
    /// an evolving incumbent, and collects the frontier.
    fn split(
        &self,
        node: Node<W>,
        depth: usize,
        floor: usize,
        out: &mut Vec<Node<W>>,
        nodes: &mut u64,
    ) -> Result<()> {
        let Some(i) = node.cand.first() else {
            out.push(node);
            return Ok(());
        };
        if depth == 0 {
            out.push(node);
            return Ok(());
        }
        *nodes += 1;
        if !self.viable(&node, floor) {
            return Ok(());
        }
        let (inc, exc) = self.children(&node, i)?;
        self.split(inc, depth - 1, floor, out, nodes)?;
        self.split(exc, depth - 1, floor, out, nodes)
    }

    fn children(&self, node: &Node<W>, i: usize) -> Result<(Node<W>, Node<W>)> {
        let rest = node.cand.without(i);
        let inc = Node {
            chosen: node.chosen.with(i),
            count: node.count + 1,
            cand: self.include(&node.chosen, rest, i)?,
        };
        let exc = Node {
            chosen: node.chosen,
            count: node.count,
            cand: self.close_down(&node.chosen, rest),
        };
        Ok((inc, exc))
    }

    /// Candidates that survive adding edge `e` to `chosen`.
    ///
    /// A candidate `f` turns incompatible only if a new matching of size
    /// `s + 1` uses both `e` and `f`, so only candidates disjoint from `e`
    /// are rechecked, against an `(s - 1)`-matching of `chosen` avoiding
    /// `e` and `f`.
    fn include(&self, chosen: &Bits<W>, cand: Bits<W>, e: usize) -> Result<Bits<W>> {
        let me = self.masks[e];
        let mut out = cand;
        let need = self.s.saturating_sub(1);
        if self.s == 0 {
            out = Bits::empty();
        } else if need == 0 {
            out = out.and_not(&self.disjoint[e]);
        } else {
            let chosen_masks: Vec<u64> = chosen.ones().map(|j| self.masks[j]).collect();
            let mut avoid = Vec::with_capacity(chosen_masks.len());
            for f in cand.and(&self.disjoint[e]).ones() {
                let used = me | self.masks[f];
                avoid.clear();
                avoid.extend(chosen_masks.iter().copied().filter(|&c| c & used == 0));
                if avoid.len() < need {
                    continue;
                }
                let blocked = need == 1
                    || MatchingSearch::new(&avoid, self.k, DEFAULT_BUDGET)
                        .reach(need)?
                        .is_some();
                if blocked {
                    out.clear(f);
                }
            }
        }
        Ok(self.close_down(&chosen.with(e), out))
    }

    /// In shifted mode, drops candidates with a lower cover that is neither
    /// chosen nor a candidate. Lower covers precede their edge in
    /// lexicographic order, so one ascending pass reaches a fixed point.
    fn close_down(&self, chosen: &Bits<W>, cand: Bits<W>) -> Bits<W> {
        if !self.shifted {
            return cand;
        }
        let mut out = cand;
        for j in cand.ones() {
            if self.lower[j].iter().any(|&l| !chosen.get(l) && !out.get(l)) {
                out.clear(j);
            }
        }
        out
    }

    fn support(&self, b: &Bits<W>) -> u64 {
        b.ones().fold(0, |acc, i| acc | self.masks[i])
    }

    /// Whether the subtree can still produce a valid family of at least
    /// `bar` edges.
    fn viable(&self, node: &Node<W>, bar: usize) -> bool {
        if self.nontrivial
            && self.support(&node.chosen) | self.support(&node.cand) != self.universe
        {
            return false;
        }
        self.upper(node) >= bar
    }

    /// `count + |cand|` minus a packing loss: the candidates are split
    /// greedily into pairwise-disjoint groups `P`; together with a matching
    /// `M` of chosen edges avoiding the vertices of `P`, at most
    /// `s - |M|` members of each group fit.
    fn upper(&self, node: &Node<W>) -> usize {
        let mut pool = node.cand;
        let mut loss = 0;
        while !pool.is_empty() {
            let mut group = Bits::<W>::empty();
            let mut avail = pool;
            let mut verts = 0u64;
            let mut size = 0usize;
            while let Some(x) = avail.first() {
                group.set(x);
                verts |= self.masks[x];
                size += 1;
                avail = avail.and(&self.disjoint[x]);
            }
            pool = pool.and_not(&group);
            if size > 1 {
                let mut used = verts;
                let mut m = 0;
                for j in node.chosen.ones() {
                    if self.masks[j] & used == 0 {
                        used |= self.masks[j];
                        m += 1;
                    }
                }
                loss += size.saturating_sub(self.s.saturating_sub(m));
            }
        }
        node.count + node.cand.count() - loss
    }
}

struct Worker<'a, const W: usize> {
    space: &'a Space<W>,
    cap: u64,
    nodes: u64,
    bar: usize,
    best: Option<(usize, Bits<W>)>,
    hit_cap: bool,
}

impl<const W: usize> Worker<'_, W> {
    fn dfs(&mut self, node: Node<W>) -> Result<()> {
        if self.hit_cap {
            return Ok(());
        }
        self.nodes += 1;
        if self.nodes > self.cap {
            self.hit_cap = true;
            return Ok(());
        }
        let sp = self.space;
        let Some(i) = node.cand.first() else {
            let valid = !sp.nontrivial || sp.support(&node.chosen) == sp.universe;
            if valid && node.count >= self.bar {
                self.best = Some((node.count, node.chosen));
                self.bar = node.count + 1;
            }
            return Ok(());
        };
        if !sp.viable(&node, self.bar) {
            return Ok(());
        }
        let (inc, exc) = sp.children(&node, i)?;
        self.dfs(inc)?;
        self.dfs(exc)
    }
}
