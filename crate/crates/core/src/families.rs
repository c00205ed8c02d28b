//! The named extremal constructions: generators that enumerate edges straight
//! from each membership rule, and closed-form exact counters.
//!
//! With `n`, `k`, `s` fixed and `[m] = {1..m}`:
//!
//! * `A_i`: k-sets meeting `[(s+1)i - 1]` in at least `i` vertices.
//! * `B`: k-sets meeting `[s-1]`, the set `S = {s+1..s+k}`, and k-sets
//!   containing `s` that meet `S`.
//! * `E0`: all k-sets of `[ks+k-2]`; k-sets whose only vertex outside
//!   `[ks+k-2]` is `ks+k-1` and that meet `[k-1]`; and `[k-1] + {x}` for
//!   `ks+k <= x <= n`.
//! * `E1`: all k-sets of `[ks+k-2]`, and k-sets containing `1` with exactly
//!   one vertex outside `[ks+k-2]`.
//! * `complete`: every k-set of `[n]`. `star`: every k-set containing `1`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::binomial::{binomial, binomial_u64};
use crate::error::{domain, Result};
use crate::graph::{check_params, k_subsets, prefix_mask, Edge, KGraph};

/// Refuses to enumerate a universe with more k-sets than this.
pub const DEFAULT_GEN_CAP: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    A(usize),
    B,
    E0,
    E1,
    Complete,
    Star,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: u64,
    pub k: u64,
    pub s: u64,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, n: u64, k: u64, s: u64) -> Self {
        FamilySpec { kind, n, k, s }
    }

    /// The slack `n - k(s+1)`.
    pub fn ell(&self) -> i128 {
        self.n as i128 - (self.k as i128) * (self.s as i128 + 1)
    }

    /// Smallest `n` accepted for this kind at the given `k`, `s`.
    pub fn min_n(kind: FamilyKind, k: u64, s: u64) -> u64 {
        let lower = match kind {
            FamilyKind::A(i) => ((s + 1) * i as u64).saturating_sub(1),
            FamilyKind::B => s + k,
            FamilyKind::E0 | FamilyKind::E1 => k * s + k - 1,
            FamilyKind::Complete | FamilyKind::Star => k,
        };
        lower.max(k)
    }

    /// Checks the parameter domain of the kind.
    pub fn validate(&self) -> Result<()> {
        let FamilySpec { kind, n, k, s } = *self;
        if k < 2 {
            return Err(domain(format!("{self}: k must be at least 2")));
        }
        if n < k {
            return Err(domain(format!("{self}: n must be at least k")));
        }
        let needs_s = !matches!(kind, FamilyKind::Complete | FamilyKind::Star);
        if needs_s && s < 1 {
            return Err(domain(format!("{self}: s must be at least 1")));
        }
        if let FamilyKind::A(i) = kind {
            if i < 1 || i as u64 > k {
                return Err(domain(format!("{self}: index i must lie in 1..={k}")));
            }
        }
        let min = Self::min_n(kind, k, s);
        if n < min {
            return Err(domain(format!("{self}: requires n >= {min}")));
        }
        Ok(())
    }

    /// Membership test straight from the definition.
    fn contains(&self, e: Edge) -> bool {
        let (n, k, s) = (self.n as usize, self.k as usize, self.s as usize);
        let prefix = |m: usize| e.mask() & prefix_mask(m);
        match self.kind {
            FamilyKind::A(i) => prefix((s + 1) * i - 1).count_ones() as usize >= i,
            FamilyKind::B => {
                let big_s = prefix(s + k) & !prefix(s);
                prefix(s - 1) != 0
                    || e.mask() == big_s
                    || (e.contains(s) && e.mask() & big_s != 0)
            }
            FamilyKind::E0 => {
                let core = k * s + k - 2;
                let outside = Edge::from_mask(e.mask() & !prefix(core));
                match outside.len() {
                    0 => true,
                    1 => {
                        let x = outside.min_vertex().expect("one vertex");
                        (x == core + 1 && prefix(k - 1) != 0)
                            || (x >= core + 2 && x <= n && e.mask() & !outside.mask() == prefix(k - 1))
                    }
                    _ => false,
                }
            }
            FamilyKind::E1 => {
                let core = k * s + k - 2;
                let outside = (e.mask() & !prefix(core)).count_ones();
                outside == 0 || (outside == 1 && e.contains(1))
            }
            FamilyKind::Complete => true,
            FamilyKind::Star => e.contains(1),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, k, s) = (self.n, self.k, self.s);
        match self.kind {
            FamilyKind::A(i) => write!(f, "A{i}({n},{k},{s})"),
            FamilyKind::B => write!(f, "B({n},{k},{s})"),
            FamilyKind::E0 => write!(f, "E0({n},{k},{s})"),
            FamilyKind::E1 => write!(f, "E1({n},{k},{s})"),
            FamilyKind::Complete => write!(f, "complete({n},{k})"),
            FamilyKind::Star => write!(f, "star({n},{k})"),
        }
    }
}

/// Enumerates the family, scanning all k-subsets of `[n]`.
pub fn gen_family(spec: &FamilySpec) -> Result<KGraph> {
    gen_family_capped(spec, DEFAULT_GEN_CAP)
}

pub fn gen_family_capped(spec: &FamilySpec, cap: u64) -> Result<KGraph> {
    spec.validate()?;
    let (n, k) = (spec.n as usize, spec.k as usize);
    check_params(n, k)?;
    let total = binomial_u64(spec.n, spec.k);
    if total > cap {
        return Err(domain(format!(
            "{spec}: C({n}, {k}) = {total} exceeds the enumeration cap {cap}"
        )));
    }
    let edges = k_subsets(n, k).filter(|&e| spec.contains(e)).collect();
    Ok(KGraph::from_edges_unchecked(n, k, edges))
}

/// Exact size of the family from closed forms.
pub fn count_family(spec: &FamilySpec) -> Result<BigUint> {
    spec.validate()?;
    let FamilySpec { n, k, s, .. } = *spec;
    Ok(match spec.kind {
        FamilyKind::A(i) => count_a(n, k, s, i as u64),
        FamilyKind::B => count_b(n, k, s),
        FamilyKind::E0 => count_e0(n, k, s),
        FamilyKind::E1 => count_e1(n, k, s),
        FamilyKind::Complete => binomial(n, k),
        FamilyKind::Star => binomial(n - 1, k - 1),
    })
}

/// `sum_{j=i..k} C(p, j) C(n - p, k - j)` with `p = (s+1)i - 1`.
pub(crate) fn count_a(n: u64, k: u64, s: u64, i: u64) -> BigUint {
    let p = (s + 1) * i - 1;
    let mut total = BigUint::zero();
    for j in i..=k {
        total += binomial(p, j) * binomial(n - p, k - j);
    }
    total
}

/// `C(n,k) - C(n-s,k) - C(n-s-k,k-1) + 1`.
pub(crate) fn count_b(n: u64, k: u64, s: u64) -> BigUint {
    binomial(n, k) + 1u32 - binomial(n - s, k) - binomial(n - s - k, k - 1)
}

/// `C(ks+k-2, k) + C(ks+k-2, k-1) - C(ks-1, k-1) + (l + 1)` with `l = n - k(s+1)`.
pub(crate) fn count_e0(n: u64, k: u64, s: u64) -> BigUint {
    let core = k * s + k - 2;
    let tail = n + 1 - (k * s + k);
    binomial(core, k) + binomial(core, k - 1) - binomial(k * s - 1, k - 1) + tail
}

/// `C(ks+k-2, k) + (l + 2) C(ks+k-3, k-2)`.
pub(crate) fn count_e1(n: u64, k: u64, s: u64) -> BigUint {
    let core = k * s + k - 2;
    let outside = n + 2 - (k * s + k);
    binomial(core, k) + binomial(core - 1, k - 2) * outside
}
