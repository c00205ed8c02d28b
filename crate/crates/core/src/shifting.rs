//! Shifting (compression) of k-graphs.
//!
//! `S(x, y)` with `x < y` replaces `y` by `x` in every edge that contains `y`
//! but not `x`, unless the replacement is already an edge. Shifting keeps the
//! edge count and never increases the matching number.

use std::fmt::{self, Write as _};

use num_bigint::BigUint;

use crate::binomial::binomial;
use crate::error::{domain, Error, Result};
use crate::graph::{vertex_mask, Edge, KGraph, LinkKind};

/// A relabeling of `{1..n}`; `map[v - 1]` is the new label of vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    map: Vec<usize>,
}

impl Relabeling {
    pub fn identity(n: usize) -> Self {
        Relabeling {
            map: (1..=n).collect(),
        }
    }

    /// Fails unless `map` is a permutation of `1..=map.len()`.
    pub fn from_map(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(domain(format!("{map:?} is not a permutation of 1..={n}")));
            }
        }
        Ok(Relabeling { map })
    }

    pub fn image(&self, v: usize) -> usize {
        self.map[v - 1]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn apply_edge(&self, e: Edge) -> Edge {
        e.vertices()
            .fold(Edge::EMPTY, |acc, v| acc.with(self.map[v - 1]))
    }

    pub fn apply(&self, f: &KGraph) -> KGraph {
        let edges = f.edges().iter().map(|&e| self.apply_edge(e)).collect();
        KGraph::from_edges_unchecked(f.n(), f.k(), edges)
    }
}

impl fmt::Display for Relabeling {
    /// Cycle notation without fixed points, `id` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("id");
        }
        let mut seen = vec![false; self.map.len()];
        for start in 1..=self.map.len() {
            if seen[start - 1] || self.map[start - 1] == start {
                continue;
            }
            f.write_str("(")?;
            let mut v = start;
            loop {
                seen[v - 1] = true;
                if v != start {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
                v = self.map[v - 1];
                if v == start {
                    break;
                }
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// One applied shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftStep {
    pub x: usize,
    pub y: usize,
    /// Number of edges that were moved.
    pub moved: usize,
    pub potential_before: u128,
    pub potential_after: u128,
    /// Relabeling applied right after the shift, if any.
    pub renaming: Option<Relabeling>,
}

impl fmt::Display for ShiftStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} moved={} pot {}->{} perm=",
            self.x, self.y, self.moved, self.potential_before, self.potential_after
        )?;
        match &self.renaming {
            Some(r) => write!(f, "{r}"),
            None => f.write_str("id"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftTrace {
    /// Relabeling applied before the first shift (degree normalization).
    pub initial_renaming: Option<Relabeling>,
    pub steps: Vec<ShiftStep>,
    pub result: KGraph,
}

impl ShiftTrace {
    /// Line-oriented export: one step per line. A non-trivial initial
    /// renaming is recorded as a leading `#` comment.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(r) = &self.initial_renaming {
            let _ = writeln!(out, "# initial perm={r}");
        }
        for step in &self.steps {
            let _ = writeln!(out, "{step}");
        }
        out
    }
}

fn check_pair(f: &KGraph, x: usize, y: usize) -> Result<()> {
    f.check_vertex(x)?;
    f.check_vertex(y)?;
    if x >= y {
        return Err(domain(format!("shift requires x < y, got x = {x}, y = {y}")));
    }
    Ok(())
}

/// Applies `S(x, y)` and reports how many edges moved.
fn shift_counted(f: &KGraph, x: usize, y: usize) -> (KGraph, usize) {
    let mut moved = 0;
    let edges = f
        .edges()
        .iter()
        .map(|&e| {
            if e.contains(y) && !e.contains(x) {
                let g = e.without(y).with(x);
                if !f.contains(g) {
                    moved += 1;
                    return g;
                }
            }
            e
        })
        .collect();
    (KGraph::from_edges_unchecked(f.n(), f.k(), edges), moved)
}

/// Number of edges `S(x, y)` would move, without building the result.
fn movable(f: &KGraph, x: usize, y: usize) -> usize {
    f.edges()
        .iter()
        .filter(|e| e.contains(y) && !e.contains(x) && !f.contains(e.without(y).with(x)))
        .count()
}

/// `S(x, y)(F)` for `1 <= x < y <= n`.
pub fn shift(f: &KGraph, x: usize, y: usize) -> Result<KGraph> {
    check_pair(f, x, y)?;
    Ok(shift_counted(f, x, y).0)
}

/// Sum over vertices of the squared degree.
pub fn potential(f: &KGraph) -> u128 {
    f.degrees().iter().map(|&d| (d as u128) * (d as u128)).sum()
}

/// True iff `S(i, j)(F) = F` for all `i < j` in `ys`.
pub fn is_shifted_on(f: &KGraph, ys: &[usize]) -> Result<bool> {
    let mut y: Vec<usize> = Edge::from_mask(vertex_mask(f.n(), ys)?).to_vec();
    y.dedup();
    for (a, &i) in y.iter().enumerate() {
        for &j in &y[a + 1..] {
            if movable(f, i, j) > 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Shifts until `F` is shifted on `ys`.
///
/// Sweeps the pairs `i < j` of `ys` in lexicographic order, applying every
/// shift that changes the family, until a full sweep changes nothing. Each
/// applied shift strictly lowers the total label sum over all edges, so the
/// loop terminates.
pub fn shift_closure(f: &KGraph, ys: &[usize]) -> Result<ShiftTrace> {
    let y = Edge::from_mask(vertex_mask(f.n(), ys)?).to_vec();
    let mut g = f.clone();
    let mut steps = Vec::new();
    let mut pot = potential(&g);
    loop {
        let mut changed = false;
        for (a, &i) in y.iter().enumerate() {
            for &j in &y[a + 1..] {
                if movable(&g, i, j) == 0 {
                    continue;
                }
                let (h, moved) = shift_counted(&g, i, j);
                let after = potential(&h);
                steps.push(ShiftStep {
                    x: i,
                    y: j,
                    moved,
                    potential_before: pot,
                    potential_after: after,
                    renaming: None,
                });
                pot = after;
                g = h;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Ok(ShiftTrace {
        initial_renaming: None,
        steps,
        result: g,
    })
}

/// Relabels vertices so that degrees are non-increasing, breaking ties by
/// the original label.
pub fn normalize_degrees(f: &KGraph) -> (KGraph, Relabeling) {
    let deg = f.degrees();
    let mut order: Vec<usize> = (1..=f.n()).collect();
    order.sort_by(|&a, &b| deg[b - 1].cmp(&deg[a - 1]).then(a.cmp(&b)));
    let mut map = vec![0; f.n()];
    for (new, &old) in order.iter().enumerate() {
        map[old - 1] = new + 1;
    }
    let r = Relabeling { map };
    let g = if r.is_identity() { f.clone() } else { r.apply(f) };
    (g, r)
}

fn degrees_sorted(f: &KGraph) -> bool {
    f.degrees().windows(2).all(|w| w[0] >= w[1])
}

/// Applies the lexicographically first shift `S(x, y)`, `x < y <= m`, that
/// changes `F`, and checks that the degree-square potential strictly rose.
///
/// Requires non-increasing degrees so that `deg(x) >= deg(y)` for every
/// candidate pair. Returns `None` when `F` is already shifted on `[m]`.
pub fn meaningful_shift_step(f: &KGraph, m: usize) -> Result<Option<(KGraph, ShiftStep)>> {
    if m == 0 || m > f.n() {
        return Err(domain(format!("prefix length m = {m} must lie in 1..={}", f.n())));
    }
    if !degrees_sorted(f) {
        return Err(domain("degrees are not sorted in non-increasing order"));
    }
    for x in 1..m {
        for y in x + 1..=m {
            if movable(f, x, y) == 0 {
                continue;
            }
            let before = potential(f);
            let (g, moved) = shift_counted(f, x, y);
            let after = potential(&g);
            if after <= before {
                return Err(Error::Invariant(format!(
                    "shift ({x}, {y}) with deg(x) >= deg(y) did not raise the potential: {before} -> {after}"
                )));
            }
            let step = ShiftStep {
                x,
                y,
                moved,
                potential_before: before,
                potential_after: after,
                renaming: None,
            };
            return Ok(Some((g, step)));
        }
    }
    Ok(None)
}

/// Evidence gathered when a shift would isolate a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftFailure {
    /// Steps completed before the failing shift; `result` is the family the
    /// failing shift was applied to.
    pub trace: ShiftTrace,
    pub x: usize,
    pub y: usize,
    /// Vertices isolated by the failing shift.
    pub isolated: Vec<usize>,
    /// `|N(x, y)|`.
    pub pair_link: usize,
    /// `|N(x, not y)| + |N(y, not x)|`.
    pub cross_links: usize,
    /// `C(n - 2, k - 1)`.
    pub limit: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProcedureOutcome {
    /// A non-trivial family shifted on `[m]`.
    Shifted(ShiftTrace),
    /// Some meaningful shift would have created an isolated vertex.
    Blocked(ShiftFailure),
}

/// Alternates degree normalization and meaningful shifts inside `[m]` while
/// the family stays non-trivial.
///
/// The relabeling is redone after every applied shift. The process stops
/// with [`ProcedureOutcome::Shifted`] once no shift inside `[m]` changes the
/// family. If a shift would isolate a vertex, the necessary conditions for
/// that event (`N(x, y)` empty and `|N(x, not y)| + |N(y, not x)| <= C(n-2, k-1)`)
/// are checked and returned as [`ProcedureOutcome::Blocked`]; a violation
/// of those conditions is an [`Error::Invariant`].
pub fn nontrivial_shift_procedure(f: &KGraph, m: usize) -> Result<ProcedureOutcome> {
    if !f.is_nontrivial() {
        return Err(domain(format!(
            "input has isolated vertices {:?}",
            f.isolated_vertices()
        )));
    }
    if m == 0 || m > f.n() {
        return Err(domain(format!("prefix length m = {m} must lie in 1..={}", f.n())));
    }
    let (mut g, first) = normalize_degrees(f);
    let mut trace = ShiftTrace {
        initial_renaming: (!first.is_identity()).then_some(first),
        steps: Vec::new(),
        result: g.clone(),
    };
    while let Some((h, mut step)) = meaningful_shift_step(&g, m)? {
        if !h.is_nontrivial() {
            let (x, y) = (step.x, step.y);
            let pair_link = g.link(x, LinkKind::With(y))?.len();
            let cross_links =
                g.link(x, LinkKind::Avoid(y))?.len() + g.link(y, LinkKind::Avoid(x))?.len();
            let limit = binomial(g.n() as u64 - 2, g.k() as u64 - 1);
            if pair_link != 0 || BigUint::from(cross_links) > limit {
                return Err(Error::Invariant(format!(
                    "shift ({x}, {y}) isolated a vertex but |N(x,y)| = {pair_link}, cross links = {cross_links}, limit = {limit}"
                )));
            }
            trace.result = g;
            return Ok(ProcedureOutcome::Blocked(ShiftFailure {
                trace,
                x,
                y,
                isolated: h.isolated_vertices(),
                pair_link,
                cross_links,
                limit,
            }));
        }
        let (next, r) = normalize_degrees(&h);
        step.renaming = (!r.is_identity()).then_some(r);
        trace.steps.push(step);
        g = next;
    }
    trace.result = g;
    Ok(ProcedureOutcome::Shifted(trace))
}
