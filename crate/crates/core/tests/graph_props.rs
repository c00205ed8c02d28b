mod common;

use matchlab::{read_khg, write_khg, KGraph, LinkKind};
use proptest::prelude::*;

proptest! {
    #[test]
    fn handshake(f in common::graph(2..=4, 9)) {
        let total: usize = f.degrees().iter().sum();
        prop_assert_eq!(total, f.k() * f.len());
    }

    #[test]
    fn link_sizes(f in common::graph(2..=3, 8), x in 1usize..=8, y in 1usize..=8) {
        let n = f.n();
        let (x, y) = ((x - 1) % n + 1, (y - 1) % n + 1);
        let full = f.link(x, LinkKind::Full).unwrap();
        prop_assert_eq!(full.len(), f.degree(x));
        prop_assert!(full.sets.iter().all(|s| s.len() == f.k() - 1 && !s.contains(x)));
        if x != y {
            let with = f.link(x, LinkKind::With(y)).unwrap().len();
            let avoid = f.link(x, LinkKind::Avoid(y)).unwrap().len();
            prop_assert_eq!(with + avoid, f.degree(x));
        }
    }

    #[test]
    fn induced_identity_and_monotone(f in common::graph(2..=3, 8), a in any::<u8>(), b in any::<u8>()) {
        let n = f.n();
        let all: Vec<usize> = (1..=n).collect();
        prop_assert_eq!(&f.induced(&all).unwrap(), &f);
        let small: Vec<usize> = (1..=n).filter(|v| (a & b) >> (v - 1) & 1 == 1).collect();
        let large: Vec<usize> = (1..=n).filter(|v| a >> (v - 1) & 1 == 1).collect();
        let gs = f.induced(&small).unwrap();
        let gl = f.induced(&large).unwrap();
        prop_assert!(gs.edges().iter().all(|&e| gl.contains(e)));
        prop_assert!(gl.edges().iter().all(|&e| f.contains(e)));
    }

    #[test]
    fn khg_round_trip(f in common::graph(2..=4, 10)) {
        let text = write_khg(&f);
        let back = read_khg(&text).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(write_khg(&back), text);
    }

    #[test]
    fn construction_order_is_irrelevant(f in common::graph(2..=3, 8)) {
        let mut lists = f.edge_lists();
        lists.reverse();
        let again = KGraph::new(f.n(), f.k(), lists).unwrap();
        prop_assert_eq!(again, f);
    }
}
