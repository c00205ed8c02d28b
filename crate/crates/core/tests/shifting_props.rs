mod common;

use matchlab::graph::k_subsets;
use matchlab::invariants::matching_number;
use matchlab::shifting::{is_shifted_on, potential, shift, shift_closure};
use matchlab::LinkKind;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn shifts_keep_size_and_never_raise_nu(f in common::graph(2..=3, 8)) {
        let nu = matching_number(&f).unwrap().value;
        for x in 1..=f.n() {
            for y in x + 1..=f.n() {
                let g = shift(&f, x, y).unwrap();
                prop_assert_eq!(g.len(), f.len());
                prop_assert!(matching_number(&g).unwrap().value <= nu);
            }
        }
    }

    #[test]
    fn heavier_vertex_shifts_raise_the_potential(f in common::graph(2..=3, 8)) {
        for x in 1..=f.n() {
            for y in x + 1..=f.n() {
                let g = shift(&f, x, y).unwrap();
                if f.degree(x) >= f.degree(y) && g != f {
                    prop_assert!(potential(&g) > potential(&f));
                }
            }
        }
    }

    #[test]
    fn potential_bound(f in common::graph(2..=4, 9)) {
        let m = f.len() as u128;
        prop_assert!(potential(&f) <= f.n() as u128 * m * m);
    }

    #[test]
    fn isolating_shifts_meet_the_necessary_conditions(f in common::graph(2..=3, 8)) {
        prop_assume!(f.is_nontrivial());
        let limit = common::binom(f.n() as u64 - 2, f.k() as u64 - 1) as usize;
        for x in 1..=f.n() {
            for y in x + 1..=f.n() {
                let g = shift(&f, x, y).unwrap();
                if !g.is_nontrivial() {
                    prop_assert_eq!(g.isolated_vertices(), vec![y]);
                    prop_assert!(f.link(x, LinkKind::With(y)).unwrap().is_empty());
                    let cross = f.link(x, LinkKind::Avoid(y)).unwrap().len()
                        + f.link(y, LinkKind::Avoid(x)).unwrap().len();
                    prop_assert!(cross <= limit);
                }
            }
        }
    }

    #[test]
    fn closure_is_dominated_within_the_prefix(f in common::graph(2..=3, 8), m in 2usize..=8) {
        let m = m.min(f.n());
        let ys: Vec<usize> = (1..=m).collect();
        let g = shift_closure(&f, &ys).unwrap().result;
        prop_assert_eq!(g.len(), f.len());
        prop_assert!(is_shifted_on(&g, &ys).unwrap());
        // Every k-set inside [m] dominated coordinatewise by an edge inside
        // [m] is an edge.
        let inside: Vec<_> = g.edges().iter().filter(|e| e.vertices().all(|v| v <= m)).collect();
        for e in &inside {
            let ev = e.to_vec();
            for d in k_subsets(m, g.k()) {
                let dv = d.to_vec();
                if dv.iter().zip(&ev).all(|(a, b)| a <= b) {
                    prop_assert!(g.contains(d));
                }
            }
        }
    }
}
