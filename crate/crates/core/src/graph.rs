//! k-uniform hypergraphs on the vertex set `{1..n}`.
//!
//! Edges are stored as vertex bitmasks (vertex `v` is bit `v - 1`), so `n`
//! is limited to [`MAX_VERTICES`]. A [`KGraph`] keeps its edges sorted in
//! lexicographic order of their ascending vertex sequences; two graphs with
//! the same edge set therefore have identical representations.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::{domain, Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices encoded as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Edge(u64);

impl Edge {
    pub const EMPTY: Edge = Edge(0);

    #[inline]
    pub const fn from_mask(mask: u64) -> Self {
        Edge(mask)
    }

    /// Builds an edge from 1-based vertices. Panics on a vertex outside `1..=64`.
    pub fn from_vertices(vertices: &[usize]) -> Self {
        let mut mask = 0u64;
        for &v in vertices {
            assert!((1..=MAX_VERTICES).contains(&v), "vertex {v} out of range");
            mask |= 1 << (v - 1);
        }
        Edge(mask)
    }

    #[inline]
    pub const fn mask(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v >= 1 && v <= MAX_VERTICES && self.0 & (1 << (v - 1)) != 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Edge) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: Edge) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn with(self, v: usize) -> Edge {
        Edge(self.0 | (1 << (v - 1)))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Edge {
        Edge(self.0 & !(1 << (v - 1)))
    }

    /// Smallest vertex, if any.
    #[inline]
    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Vertices in ascending order.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.vertices().collect()
    }
}

/// Ascending iterator over the vertices of an [`Edge`].
#[derive(Clone)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Vertices {}

impl Ord for Edge {
    /// Lexicographic order on ascending vertex sequences.
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        let diff = self.0 ^ other.0;
        let low = diff & diff.wrapping_neg();
        // Both sequences agree on every vertex below `low`. The set holding
        // `low` is smaller unless the other sequence already ended there.
        let below = low - 1;
        let (a_rest, b_rest) = (self.0 & !below, other.0 & !below);
        if self.0 & low != 0 {
            if b_rest == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if a_rest == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Edge {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.vertices()).finish()
    }
}

impl fmt::Display for Edge {
    /// Space-separated ascending vertices, the `.khg` edge-line form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Mask of the vertices `1..=n`.
#[inline]
pub const fn prefix_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over all `k`-subsets of `{1..n}` in lexicographic order.
pub struct KSubsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for KSubsets {
    type Item = Edge;

    fn next(&mut self) -> Option<Edge> {
        let cur = self.current.as_mut()?;
        let out = Edge::from_vertices(cur);
        let k = cur.len();
        // Advance to the lexicographic successor.
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.n - (k - 1 - i) {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// All `k`-subsets of `{1..n}`, lexicographically.
pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    assert!(n <= MAX_VERTICES);
    KSubsets {
        n,
        current: (k <= n).then(|| (1..=k).collect()),
    }
}

/// Converts a list of 1-based vertices to a mask, validating the range.
pub fn vertex_mask(n: usize, vertices: &[usize]) -> Result<u64> {
    let mut mask = 0;
    for &v in vertices {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        mask |= 1u64 << (v - 1);
    }
    Ok(mask)
}

/// A k-uniform hypergraph on `{1..n}` in canonical form.
///
/// Immutable once built. Membership queries go through a hash index.
#[derive(Clone)]
pub struct KGraph {
    n: usize,
    k: usize,
    edges: Vec<Edge>,
    index: HashSet<Edge>,
}

impl KGraph {
    /// Builds a canonical graph from raw vertex lists.
    ///
    /// Duplicate edges are merged and vertex order inside an edge is
    /// irrelevant. Rejects `n < k`, `k < 2`, `n > 64`, vertices outside
    /// `1..=n`, and edges that do not have exactly `k` distinct vertices.
    pub fn new<I, E>(n: usize, k: usize, raw_edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        check_params(n, k)?;
        let mut edges = Vec::new();
        for raw in raw_edges {
            let raw = raw.as_ref();
            let mask = vertex_mask(n, raw)?;
            let edge = Edge(mask);
            if edge.len() != k || raw.len() != k {
                return Err(Error::EdgeSize {
                    edge: raw.to_vec(),
                    got: edge.len(),
                    expected: k,
                });
            }
            edges.push(edge);
        }
        Ok(Self::from_edges_unchecked(n, k, edges))
    }

    /// Builds a graph from edges already known to be valid `k`-subsets of
    /// `{1..n}`. Sorts and deduplicates.
    pub(crate) fn from_edges_unchecked(n: usize, k: usize, mut edges: Vec<Edge>) -> Self {
        debug_assert!(edges
            .iter()
            .all(|e| e.len() == k && e.mask() & !prefix_mask(n) == 0));
        edges.sort_unstable();
        edges.dedup();
        let index = edges.iter().copied().collect();
        KGraph { n, k, edges, index }
    }

    /// Validating constructor for pre-built edges.
    pub fn from_edges(n: usize, k: usize, edges: Vec<Edge>) -> Result<Self> {
        check_params(n, k)?;
        for &e in &edges {
            if e.mask() & !prefix_mask(n) != 0 {
                let bad = e.vertices().find(|&v| v > n).unwrap_or(0);
                return Err(Error::VertexOutOfRange { vertex: bad, n });
            }
            if e.len() != k {
                return Err(Error::EdgeSize {
                    edge: e.to_vec(),
                    got: e.len(),
                    expected: k,
                });
            }
        }
        Ok(Self::from_edges_unchecked(n, k, edges))
    }

    pub fn empty(n: usize, k: usize) -> Result<Self> {
        Self::from_edges(n, k, Vec::new())
    }

    /// The complete k-graph on `{1..m}` inside the universe `{1..n}`.
    pub fn complete_on(n: usize, k: usize, m: usize) -> Result<Self> {
        check_params(n, k)?;
        if m > n {
            return Err(domain(format!("clique size {m} exceeds n = {n}")));
        }
        Ok(Self::from_edges_unchecked(n, k, k_subsets(m, k).collect()))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    /// Edges in lexicographic order.
    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    #[inline]
    pub fn contains(&self, e: Edge) -> bool {
        self.index.contains(&e)
    }

    pub fn contains_vertices(&self, vertices: &[usize]) -> bool {
        vertices.iter().all(|&v| (1..=self.n).contains(&v))
            && self.contains(Edge::from_vertices(vertices))
    }

    /// Mask of every vertex of the universe.
    #[inline]
    pub fn universe(&self) -> u64 {
        prefix_mask(self.n)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Degrees of all vertices; entry `v - 1` holds the degree of `v`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for e in &self.edges {
            for v in e.vertices() {
                deg[v - 1] += 1;
            }
        }
        deg
    }

    /// Union of all edges.
    pub fn support(&self) -> u64 {
        self.edges.iter().fold(0, |acc, e| acc | e.mask())
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        Edge(self.universe() & !self.support()).to_vec()
    }

    /// True iff no vertex of `{1..n}` is isolated.
    pub fn is_nontrivial(&self) -> bool {
        self.support() == self.universe()
    }

    /// Link families `N(x)`, `N(x,y)` and `N(x, not y)`.
    pub fn link(&self, x: usize, kind: LinkKind) -> Result<LinkFamily> {
        self.check_vertex(x)?;
        let (origin, with, avoid) = match kind {
            LinkKind::Full => (vec![x], 0, 0),
            LinkKind::With(y) => {
                self.check_other(x, y)?;
                (vec![x, y], 1u64 << (y - 1), 0)
            }
            LinkKind::Avoid(y) => {
                self.check_other(x, y)?;
                (vec![x], 0, 1u64 << (y - 1))
            }
        };
        let remove = Edge(with).with(x);
        let sets = self
            .edges
            .iter()
            .filter(|e| e.contains(x) && e.mask() & with == with && e.mask() & avoid == 0)
            .map(|e| Edge(e.mask() & !remove.mask()))
            .collect();
        // Removing a fixed vertex set from lex-sorted edges that all contain
        // it preserves the order.
        Ok(LinkFamily { origin, sets })
    }

    /// Restriction to edges inside `vertices`, keeping the original labels and `n`.
    pub fn induced(&self, vertices: &[usize]) -> Result<KGraph> {
        let mask = vertex_mask(self.n, vertices)?;
        Ok(self.induced_mask(mask))
    }

    pub(crate) fn induced_mask(&self, mask: u64) -> KGraph {
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .copied()
            .filter(|e| e.mask() & !mask == 0)
            .collect();
        let index = edges.iter().copied().collect();
        KGraph {
            n: self.n,
            k: self.k,
            edges,
            index,
        }
    }

    /// Edges as 1-based vertex lists.
    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|e| e.to_vec()).collect()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn check_other(&self, x: usize, y: usize) -> Result<()> {
        self.check_vertex(y)?;
        if x == y {
            return Err(domain(format!("link vertices must be distinct, got {x} twice")));
        }
        Ok(())
    }
}

pub(crate) fn check_params(n: usize, k: usize) -> Result<()> {
    if k < 2 {
        return Err(domain(format!("edge size k = {k} must be at least 2")));
    }
    if n < k {
        return Err(domain(format!("n = {n} is smaller than k = {k}")));
    }
    if n > MAX_VERTICES {
        return Err(domain(format!("n = {n} exceeds the supported maximum {MAX_VERTICES}")));
    }
    Ok(())
}

impl PartialEq for KGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.k == other.k && self.edges == other.edges
    }
}

impl Eq for KGraph {}

impl fmt::Debug for KGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("KGraph")
            .field("n", &self.n)
            .field("k", &self.k)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Which link family to extract around a vertex `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinkKind {
    /// `N(x) = {F - x : x in F}`.
    Full,
    /// `N(x, y) = {F - {x, y} : x, y in F}`.
    With(usize),
    /// `N(x, not y) = {F - x : x in F, y not in F}`.
    Avoid(usize),
}

/// A link family: the removed origin vertices and the remaining sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkFamily {
    pub origin: Vec<usize>,
    pub sets: Vec<Edge>,
}

impl LinkFamily {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn set_lists(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(|e| e.to_vec()).collect()
    }
}
