mod common;

use matchlab::binomial::binomial_u64;
use matchlab::search::{max_family, verify_report, RowStatus, SearchMode, SearchProblem};
use matchlab::DEFAULT_BUDGET;

/// `(n, k)` with at most 36 k-sets.
fn small_grid() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for k in 2..=5 {
        for n in k..=9 {
            if binomial_u64(n as u64, k as u64) <= 36 {
                out.push((n, k));
            }
        }
    }
    out
}

fn optimum(n: usize, k: usize, s: usize, mode: SearchMode) -> usize {
    let c = max_family(&SearchProblem::new(n, k, s, mode)).unwrap();
    assert!(c.exhaustive, "({n}, {k}, {s}, {mode}) not exhaustive");
    let p = c.problem;
    assert!(p.admits(&c.witness).unwrap(), "({n}, {k}, {s}, {mode}) witness");
    assert_eq!(c.best_size, c.witness.len());
    c.best_size
}

#[test]
fn shifted_search_agrees_with_plain_search() {
    for (n, k) in small_grid() {
        for s in 0..=n / k {
            let plain = optimum(n, k, s, SearchMode::Unrestricted);
            let shifted = optimum(n, k, s, SearchMode::Shifted);
            assert_eq!(plain, shifted, "({n}, {k}, {s})");
            if s >= 1 {
                let nontrivial = optimum(n, k, s, SearchMode::NonTrivial);
                let both = optimum(n, k, s, SearchMode::ShiftedNonTrivial);
                assert!(both <= nontrivial && nontrivial <= plain, "({n}, {k}, {s})");
            }
        }
    }
}

#[test]
fn optimum_grows_with_s_and_n() {
    for (n, k) in small_grid() {
        let mut last = 0;
        for s in 0..=n / k + 1 {
            let v = optimum(n, k, s, SearchMode::Unrestricted);
            assert!(v >= last, "({n}, {k}) at s = {s}");
            last = v;
        }
        if binomial_u64(n as u64 + 1, k as u64) <= 36 {
            for s in 0..=n / k {
                let here = optimum(n, k, s, SearchMode::Unrestricted);
                let there = optimum(n + 1, k, s, SearchMode::Unrestricted);
                assert!(there >= here, "({n}, {k}, {s}) to n + 1");
            }
        }
    }
}

/// Monotonicity in `n` is not guaranteed under non-triviality; report, do not
/// assert.
#[test]
fn nontrivial_growth_in_n_is_reported() {
    for (n, k) in small_grid() {
        if binomial_u64(n as u64 + 1, k as u64) > 36 {
            continue;
        }
        for s in 1..=n / k {
            let here = optimum(n, k, s, SearchMode::NonTrivial);
            let there = optimum(n + 1, k, s, SearchMode::NonTrivial);
            if there < here {
                println!("non-trivial optimum drops from {here} to {there} at ({n} -> {}, {k}, {s})", n + 1);
            }
        }
    }
}

#[test]
fn search_matches_enumeration() {
    // Enumerates every subset of C([n], k); C(n, k) <= 15.
    for (n, k) in [(4, 2), (5, 2), (6, 2), (5, 3), (6, 4), (6, 5)] {
        let sets: Vec<u64> = matchlab::graph::k_subsets(n, k).map(|e| e.mask()).collect();
        let m = sets.len();
        for s in 0..=n / k {
            for nontrivial in [false, true] {
                if nontrivial && s == 0 {
                    continue;
                }
                let mut best = 0;
                for x in 0u32..1 << m {
                    let fam: Vec<u64> = (0..m).filter(|i| x >> i & 1 == 1).map(|i| sets[i]).collect();
                    if nontrivial && fam.iter().fold(0, |a, b| a | b) != (1 << n) - 1 {
                        continue;
                    }
                    let f = matchlab::KGraph::from_edges(
                        n,
                        k,
                        fam.iter().map(|&e| matchlab::Edge::from_mask(e)).collect(),
                    )
                    .unwrap();
                    if fam.len() > best && common::naive_nu(&f) <= s {
                        best = fam.len();
                    }
                }
                let mode = SearchMode::from_flags(nontrivial, false);
                assert_eq!(optimum(n, k, s, mode), best, "({n}, {k}, {s}, {mode})");
            }
        }
    }
}

#[test]
fn report_rows() {
    let r = verify_report(6, 3, 1, &SearchMode::ALL, DEFAULT_BUDGET).unwrap();
    assert_eq!(r.failures().count(), 0);
    let asserted: Vec<_> = r.asserted().map(|row| (row.mode, row.bound)).collect();
    assert_eq!(
        asserted,
        vec![
            (SearchMode::Unrestricted, "emc"),
            (SearchMode::NonTrivial, "emc"),
            (SearchMode::Shifted, "emc"),
        ]
    );
    let shifted_nt = r.certificates.iter().find(|c| c.problem.mode() == SearchMode::ShiftedNonTrivial).unwrap();
    assert!(shifted_nt.lower_bound_only);
    let st = r
        .rows
        .iter()
        .find(|row| row.mode == SearchMode::NonTrivial && row.bound == "stability")
        .unwrap();
    assert_eq!(st.status, RowStatus::ReportOnly("s below s_0"));
}
