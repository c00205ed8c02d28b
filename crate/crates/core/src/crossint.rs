//! Cross-intersecting families: the predicate, the closed-form bound for the
//! sum of sizes of `t` non-empty pairwise cross-intersecting families, and an
//! exhaustive optimum for small universes.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::binomial::{binomial, binomial_u64};
use crate::error::{domain, Error, Result};
use crate::graph::{k_subsets, Edge, KGraph};

/// Largest `C(n, k)` the exhaustive oracle accepts.
pub const ORACLE_MAX_SETS: u64 = 22;

/// `t >= 2` families of k-subsets of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossSystem {
    families: Vec<KGraph>,
}

impl CrossSystem {
    pub fn new(families: Vec<KGraph>) -> Result<Self> {
        if families.len() < 2 {
            return Err(domain("a cross system needs at least two families"));
        }
        let (n, k) = (families[0].n(), families[0].k());
        if let Some(bad) = families.iter().find(|f| f.n() != n || f.k() != k) {
            return Err(domain(format!(
                "mismatched families: n = {n}, k = {k} versus n = {}, k = {}",
                bad.n(),
                bad.k()
            )));
        }
        Ok(CrossSystem { families })
    }

    pub fn families(&self) -> &[KGraph] {
        &self.families
    }

    pub fn n(&self) -> usize {
        self.families[0].n()
    }

    pub fn k(&self) -> usize {
        self.families[0].k()
    }

    pub fn total(&self) -> usize {
        self.families.iter().map(KGraph::len).sum()
    }
}

/// A disjoint pair taken from two different families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointPair {
    pub family_a: usize,
    pub set_a: Edge,
    pub family_b: usize,
    pub set_b: Edge,
}

/// `Ok(())` when every pair of sets from distinct families intersects, else
/// the first disjoint pair (families in index order, sets in lexicographic
/// order). Family indices are 0-based.
pub fn is_cross_intersecting(sys: &CrossSystem) -> std::result::Result<(), DisjointPair> {
    let fams = sys.families();
    for i in 0..fams.len() {
        for j in i + 1..fams.len() {
            for &a in fams[i].edges() {
                if let Some(&b) = fams[j].edges().iter().find(|b| b.is_disjoint(a)) {
                    return Err(DisjointPair {
                        family_a: i,
                        set_a: a,
                        family_b: j,
                        set_b: b,
                    });
                }
            }
        }
    }
    Ok(())
}

/// `max(C(n,k) - C(n-k,k) + t - 1, t C(n-1,k-1))` for `n >= 2k`, `t >= 2`.
pub fn sfq_bound(n: u64, k: u64, t: u64) -> Result<BigUint> {
    if k < 1 || n < 2 * k || t < 2 {
        return Err(domain(format!(
            "bound needs n >= 2k and t >= 2 (got n = {n}, k = {k}, t = {t})"
        )));
    }
    let first = binomial(n, k) + (t - 1) - binomial(n - k, k);
    let second = binomial(n - 1, k - 1) * t;
    Ok(first.max(second))
}

/// The k-subsets of `[n]` meeting every member of `family`.
pub fn transversal(n: usize, k: usize, family: &[Edge]) -> Vec<Edge> {
    k_subsets(n, k)
        .filter(|b| family.iter().all(|a| !a.is_disjoint(*b)))
        .collect()
}

/// How the oracle's optimum is structured.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OptimumShape {
    /// An intersecting core `M` shared by all families; one family is the
    /// full transversal of `M`.
    SharedCore,
    /// Families share no set; their union splits into at least `t` groups
    /// with no disjoint pair across groups.
    Split,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossOptimum {
    pub value: u64,
    pub shape: OptimumShape,
    pub certificate: CrossSystem,
}

/// Exact maximum of `sum |A_i|` over non-empty pairwise cross-intersecting
/// `A_1, .., A_t` on `C([n], k)`, for `C(n, k) <= 22`.
///
/// Classify the sets of any valid system by multiplicity. Sets used by two
/// or more families form an intersecting family `M`, and every other used
/// set meets all of `M`. When `M` is non-empty, taking `A_1 = T(M)` (all
/// sets meeting `M`) and `A_2 = .. = A_t = M` is valid and dominates, giving
/// `t|M| + |T(M) - M|`. When `M` is empty the families are disjoint, the
/// value is the size of their union, and the union must fall apart into at
/// least `t` components of the disjointness graph. Both cases are scanned
/// over every subset of `C([n], k)`; ties go to the smaller subset index,
/// with the shared-core shape first.
pub fn max_cross_sum_oracle(n: usize, k: usize, t: usize) -> Result<CrossOptimum> {
    crate::graph::check_params(n, k)?;
    if t < 2 {
        return Err(domain(format!("t = {t} must be at least 2")));
    }
    let m = binomial_u64(n as u64, k as u64);
    if m > ORACLE_MAX_SETS {
        return Err(domain(format!(
            "C({n}, {k}) = {m} exceeds the oracle limit {ORACLE_MAX_SETS}"
        )));
    }
    let sets: Vec<Edge> = k_subsets(n, k).collect();
    let m = sets.len();
    let full: u32 = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    let adj: Vec<u32> = sets
        .iter()
        .map(|a| {
            sets.iter()
                .enumerate()
                .filter(|(_, b)| a.is_disjoint(**b))
                .fold(0u32, |acc, (j, _)| acc | 1 << j)
        })
        .collect();

    // Key: larger value first, then smaller subset, then shared core first.
    let best = (1..=full)
        .into_par_iter()
        .map(|x| evaluate(x, &adj, full, t))
        .reduce(
            || None,
            |a, b| match (a, b) {
                (None, o) | (o, None) => o,
                (Some(a), Some(b)) => Some(if better(&b, &a) { b } else { a }),
            },
        );
    let (value, x, shape) = best.ok_or_else(|| Error::Invariant("no valid system".into()))?;

    let pick = |mask: u32| -> Vec<Edge> {
        (0..m).filter(|&i| mask & (1 << i) != 0).map(|i| sets[i]).collect()
    };
    let family = |mask: u32| KGraph::from_edges_unchecked(n, k, pick(mask));
    let families = match shape {
        OptimumShape::SharedCore => {
            let t_mask = full & !x.iter_ones().fold(0, |acc, i| acc | adj[i]);
            let mut fams = vec![family(t_mask)];
            fams.extend(std::iter::repeat_with(|| family(x)).take(t - 1));
            fams
        }
        OptimumShape::Split => {
            let comps = components(x, &adj);
            let mut fams: Vec<KGraph> = comps[..t - 1].iter().map(|&c| family(c)).collect();
            fams.push(family(comps[t - 1..].iter().fold(0, |acc, c| acc | c)));
            fams
        }
    };
    let certificate = CrossSystem::new(families)?;
    if is_cross_intersecting(&certificate).is_err()
        || certificate.families().iter().any(KGraph::is_empty)
        || certificate.total() as u64 != value
    {
        return Err(Error::Invariant(format!(
            "oracle certificate for ({n}, {k}, {t}) does not re-verify"
        )));
    }
    Ok(CrossOptimum {
        value,
        shape,
        certificate,
    })
}

type Candidate = (u64, u32, OptimumShape);

fn better(a: &Candidate, b: &Candidate) -> bool {
    let rank = |s: OptimumShape| matches!(s, OptimumShape::Split) as u8;
    (a.0, std::cmp::Reverse(a.1), std::cmp::Reverse(rank(a.2)))
        > (b.0, std::cmp::Reverse(b.1), std::cmp::Reverse(rank(b.2)))
}

fn evaluate(x: u32, adj: &[u32], full: u32, t: usize) -> Option<Candidate> {
    let size = x.count_ones() as u64;
    let blocked = x.iter_ones().fold(0u32, |acc, i| acc | adj[i]);
    let core = (blocked & x == 0).then(|| {
        let transversal = full & !blocked;
        let value = t as u64 * size + (transversal & !x).count_ones() as u64;
        (value, x, OptimumShape::SharedCore)
    });
    let split = (size >= t as u64 && components(x, adj).len() >= t)
        .then_some((size, x, OptimumShape::Split));
    match (core, split) {
        (Some(a), Some(b)) => Some(if better(&b, &a) { b } else { a }),
        (a, b) => a.or(b),
    }
}

/// Connected components of the disjointness graph restricted to `x`,
/// ordered by their lowest member.
fn components(x: u32, adj: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    let mut rest = x;
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let grown = frontier.iter_ones().fold(0u32, |acc, i| acc | adj[i]) & x & !comp;
            comp |= grown;
            frontier = grown;
        }
        out.push(comp);
        rest &= !comp;
    }
    out
}

trait BitIter {
    fn iter_ones(self) -> Ones;
}

impl BitIter for u32 {
    fn iter_ones(self) -> Ones {
        Ones(self)
    }
}

struct Ones(u32);

impl Iterator for Ones {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}
