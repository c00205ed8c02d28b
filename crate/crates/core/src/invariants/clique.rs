use crate::binomial::binomial_u64;
use crate::error::{Error, Result};
use crate::graph::{Edge, KGraph};

use super::{InvariantResult, Witness};

struct CliqueSearch<'a> {
    f: &'a KGraph,
    k: usize,
    degree: Vec<usize>,
    budget: u64,
    nodes: u64,
    best: Vec<usize>,
    clique: Vec<usize>,
}

impl CliqueSearch<'_> {
    /// `w` may join `clique + v` if every k-subset of `clique + {v, w}` that
    /// contains both `v` and `w` is an edge.
    fn compatible(&self, v: usize, w: usize) -> bool {
        let need = self.k - 2;
        if self.clique.len() < need {
            return true;
        }
        let base = Edge::EMPTY.with(v).with(w);
        let mut ok = true;
        for_each_subset(&self.clique, need, &mut |mask| {
            if ok && !self.f.contains(Edge::from_mask(base.mask() | mask)) {
                ok = false;
            }
        });
        ok
    }

    fn dfs(&mut self, cand: &[usize]) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExhausted {
                budget: self.budget,
            });
        }
        if self.clique.len() > self.best.len() {
            self.best = self.clique.clone();
        }
        let mut child = Vec::with_capacity(cand.len());
        for (i, &v) in cand.iter().enumerate() {
            if self.clique.len() + cand.len() - i <= self.best.len() {
                return Ok(());
            }
            // A vertex of a clique of size best + 1 lies in C(best, k - 1) edges.
            let min_deg = binomial_u64(self.best.len() as u64, self.k as u64 - 1);
            if (self.degree[v - 1] as u64) < min_deg {
                // Candidates are sorted by decreasing degree.
                return Ok(());
            }
            child.clear();
            for &w in &cand[i + 1..] {
                if self.compatible(v, w) {
                    child.push(w);
                }
            }
            self.clique.push(v);
            let next = std::mem::take(&mut child);
            self.dfs(&next)?;
            child = next;
            self.clique.pop();
        }
        Ok(())
    }
}

fn for_each_subset(items: &[usize], size: usize, visit: &mut impl FnMut(u64)) {
    fn rec(items: &[usize], size: usize, acc: u64, visit: &mut impl FnMut(u64)) {
        if size == 0 {
            visit(acc);
            return;
        }
        for i in 0..items.len() {
            if items.len() - i < size {
                break;
            }
            rec(&items[i + 1..], size - 1, acc | 1 << (items[i] - 1), visit);
        }
    }
    rec(items, size, 0, visit);
}

/// `omega(F)`: the largest `U` whose every k-subset is an edge.
///
/// Any set of fewer than `k` vertices is vacuously complete, so the value is
/// at least `k - 1`.
pub fn clique_number_with(f: &KGraph, budget: u64) -> Result<InvariantResult> {
    let degree = f.degrees();
    let mut order: Vec<usize> = (1..=f.n()).collect();
    order.sort_by(|&a, &b| degree[b - 1].cmp(&degree[a - 1]).then(a.cmp(&b)));
    let mut search = CliqueSearch {
        f,
        k: f.k(),
        degree,
        budget,
        nodes: 0,
        best: (1..f.k()).collect(),
        clique: Vec::new(),
    };
    search.dfs(&order)?;
    let mut best = search.best;
    best.sort_unstable();
    Ok(InvariantResult {
        value: best.len(),
        witness: Witness::Vertices(best),
        node_count: search.nodes,
    })
}
