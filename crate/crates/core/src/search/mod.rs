//! Exhaustive search for the largest k-graph on `[n]` with matching number
//! at most `s`, optionally non-trivial and optionally shifted, plus a table
//! comparing the optima with the catalogued bounds.
//!
//! Results are deterministic: the search tree is split into a fixed list of
//! subtrees that are searched independently (in parallel when a thread pool
//! is available) and merged in search order. Each subtree gets the full node
//! budget; the run is exhaustive only if no subtree hit it and the total
//! stayed within it. The returned witness is the lexicographically least
//! maximum family whenever the run is exhaustive.

mod bits;
mod engine;
mod report;

use std::fmt;

pub use report::{verify_report, ReportRow, RowStatus, VerifyReport};

use crate::binomial::binomial_u64;
use crate::error::{domain, Error, Result};
use crate::families::{gen_family, FamilyKind, FamilySpec};
use crate::graph::{check_params, KGraph};
use crate::invariants::{matching_number_with, DEFAULT_BUDGET};
use crate::shifting::is_shifted_on;

use engine::Space;

/// Largest `C(n, k)` searched without the shiftedness restriction.
pub const MAX_EDGES_UNRESTRICTED: u64 = 36;
/// Largest `C(n, k)` searched over shifted families.
pub const MAX_EDGES_SHIFTED: u64 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchMode {
    Unrestricted,
    NonTrivial,
    Shifted,
    ShiftedNonTrivial,
}

impl SearchMode {
    pub const ALL: [SearchMode; 4] = [
        SearchMode::Unrestricted,
        SearchMode::NonTrivial,
        SearchMode::Shifted,
        SearchMode::ShiftedNonTrivial,
    ];

    pub fn nontrivial(self) -> bool {
        matches!(self, SearchMode::NonTrivial | SearchMode::ShiftedNonTrivial)
    }

    pub fn shifted(self) -> bool {
        matches!(self, SearchMode::Shifted | SearchMode::ShiftedNonTrivial)
    }

    pub fn from_flags(nontrivial: bool, shifted: bool) -> Self {
        match (nontrivial, shifted) {
            (false, false) => SearchMode::Unrestricted,
            (true, false) => SearchMode::NonTrivial,
            (false, true) => SearchMode::Shifted,
            (true, true) => SearchMode::ShiftedNonTrivial,
        }
    }
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchMode::Unrestricted => "plain",
            SearchMode::NonTrivial => "nontrivial",
            SearchMode::Shifted => "shifted",
            SearchMode::ShiftedNonTrivial => "shifted-nontrivial",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SearchProblem {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub require_nontrivial: bool,
    pub restrict_shifted: bool,
    pub budget: u64,
}

impl SearchProblem {
    pub fn new(n: usize, k: usize, s: usize, mode: SearchMode) -> Self {
        SearchProblem {
            n,
            k,
            s,
            require_nontrivial: mode.nontrivial(),
            restrict_shifted: mode.shifted(),
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn mode(&self) -> SearchMode {
        SearchMode::from_flags(self.require_nontrivial, self.restrict_shifted)
    }

    fn validate(&self) -> Result<()> {
        check_params(self.n, self.k)?;
        let m = binomial_u64(self.n as u64, self.k as u64);
        let cap = if self.restrict_shifted {
            MAX_EDGES_SHIFTED
        } else {
            MAX_EDGES_UNRESTRICTED
        };
        if m > cap {
            return Err(domain(format!(
                "C({}, {}) = {m} exceeds the {} search limit {cap}",
                self.n,
                self.k,
                self.mode()
            )));
        }
        if self.require_nontrivial && self.s == 0 {
            return Err(domain("no non-trivial family has matching number 0"));
        }
        Ok(())
    }

    /// Does `f` meet every constraint? The matching number is computed
    /// exactly.
    pub fn admits(&self, f: &KGraph) -> Result<bool> {
        if f.n() != self.n || f.k() != self.k {
            return Ok(false);
        }
        if self.require_nontrivial && !f.is_nontrivial() {
            return Ok(false);
        }
        if self.restrict_shifted && !is_shifted_on(f, &(1..=self.n).collect::<Vec<_>>())? {
            return Ok(false);
        }
        Ok(matching_number_with(f, DEFAULT_BUDGET)?.value <= self.s)
    }
}

impl fmt::Display for SearchProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={},k={},s={},nontrivial={},shifted={}",
            self.n, self.k, self.s, self.require_nontrivial, self.restrict_shifted
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub problem: SearchProblem,
    pub best_size: usize,
    pub witness: KGraph,
    /// The whole search space was covered within the budget.
    pub exhaustive: bool,
    pub nodes: u64,
    /// Set for shifted searches under the non-triviality constraint, whose
    /// optimum only bounds the unrestricted non-trivial optimum from below.
    pub lower_bound_only: bool,
}

impl Certificate {
    /// The `.cert` sidecar text.
    pub fn to_cert_text(&self) -> String {
        format!(
            "problem={}\nbest={}\nexhaustive={}\nnodes={}\nscope={}\n",
            self.problem,
            self.best_size,
            self.exhaustive,
            self.nodes,
            if self.lower_bound_only { "lower-bound" } else { "exact" }
        )
    }
}

/// Known constructions used as starting incumbents, largest first among
/// those that satisfy the problem.
fn warm_start(p: &SearchProblem) -> Result<Option<KGraph>> {
    let (n, k, s) = (p.n as u64, p.k as u64, p.s as u64);
    let kinds = [
        FamilyKind::E0,
        FamilyKind::E1,
        FamilyKind::A(1),
        FamilyKind::A(p.k),
        FamilyKind::Star,
    ];
    let mut best: Option<KGraph> = None;
    for kind in kinds {
        let spec = FamilySpec::new(kind, n, k, s);
        if spec.validate().is_err() {
            continue;
        }
        let f = gen_family(&spec)?;
        if !p.admits(&f)? {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => f.len() > b.len() || (f.len() == b.len() && f.edges() < b.edges()),
        };
        if better {
            best = Some(f);
        }
    }
    Ok(best)
}

/// The largest family meeting the constraints of `p`.
///
/// Budget exhaustion is not an error: the best family found so far is
/// returned with `exhaustive = false`.
pub fn max_family(p: &SearchProblem) -> Result<Certificate> {
    p.validate()?;
    let m = binomial_u64(p.n as u64, p.k as u64) as usize;
    let warm = if p.s == 0 { None } else { warm_start(p)? };
    let floor = warm.as_ref().map_or(0, KGraph::len);
    let (nontrivial, shifted) = (p.require_nontrivial, p.restrict_shifted);
    let (n, k, s) = (p.n, p.k, p.s);
    let outcome = match m {
        0..=64 => Space::<1>::new(n, k, s, nontrivial, shifted).run(floor, p.budget)?,
        65..=128 => Space::<2>::new(n, k, s, nontrivial, shifted).run(floor, p.budget)?,
        129..=256 => Space::<4>::new(n, k, s, nontrivial, shifted).run(floor, p.budget)?,
        257..=512 => Space::<8>::new(n, k, s, nontrivial, shifted).run(floor, p.budget)?,
        513..=1024 => Space::<16>::new(n, k, s, nontrivial, shifted).run(floor, p.budget)?,
        _ => Space::<64>::new(n, k, s, nontrivial, shifted).run(floor, p.budget)?,
    };

    let found = outcome
        .best
        .map(|edges| KGraph::from_edges_unchecked(n, k, edges));
    let witness = match (found, warm) {
        (Some(f), Some(w)) => {
            if f.len() > w.len() || (f.len() == w.len() && f.edges() <= w.edges()) {
                f
            } else {
                w
            }
        }
        (Some(f), None) => f,
        (None, Some(w)) => w,
        (None, None) if outcome.exhaustive => {
            return Err(Error::Invariant(format!("search for {p} found no family")))
        }
        (None, None) => return Err(Error::BudgetExhausted { budget: p.budget }),
    };
    if !p.admits(&witness)? {
        return Err(Error::Invariant(format!(
            "search witness for {p} violates a constraint"
        )));
    }
    Ok(Certificate {
        problem: *p,
        best_size: witness.len(),
        witness,
        exhaustive: outcome.exhaustive,
        nodes: outcome.nodes,
        lower_bound_only: nontrivial && shifted,
    })
}
