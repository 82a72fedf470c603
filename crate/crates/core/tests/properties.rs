mod common;

use proptest::prelude::*;
use toughlab_core::canon::canonical_key;
use toughlab_core::chordal::{clique_tree, is_chordal, minimal_separators, minimal_separators_via_clique_tree, peo};
use toughlab_core::recognize::{find_hole, Witness};
use toughlab_core::toughness::{connectivity, is_t_tough, toughness, toughness_with_witness};
use toughlab_core::{parse_graph6, to_graph6, ExactRatio, Graph, ToughnessValue};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn tau_as_pair(t: ToughnessValue) -> Option<(u64, u64)> {
    t.finite().map(|r| (r.num(), r.den()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn toughness_matches_full_scan(g in graph(9)) {
        let oracle = common::brute_toughness(&g).map(common::Frac::reduced);
        prop_assert_eq!(tau_as_pair(toughness(&g)), oracle);
    }

    #[test]
    fn witness_cut_reproduces_value(g in graph(10)) {
        if let (ToughnessValue::Finite(t), Some(w)) = toughness_with_witness(&g) {
            let parts = common::components(&g, w.cut.bits());
            prop_assert_eq!(parts, w.parts);
            prop_assert_eq!(ExactRatio::new(w.cut.len() as u64, parts as u64), Some(t));
        }
    }

    #[test]
    fn t_tough_agrees_with_toughness(g in graph(8), num in 0u64..6, den in 1u64..5) {
        let t = ExactRatio::new(num, den).unwrap();
        prop_assert_eq!(is_t_tough(&g, t), toughness(&g) >= ToughnessValue::Finite(t));
    }

    #[test]
    fn deleting_an_edge_never_raises_toughness(g in graph(8)) {
        let tau = toughness(&g);
        for (u, v) in g.edges() {
            prop_assert!(toughness(&g.without_edge(u, v)) <= tau);
        }
    }

    #[test]
    fn toughness_at_most_half_connectivity(g in graph(9)) {
        if let ToughnessValue::Finite(t) = toughness(&g) {
            if g.is_connected() {
                prop_assert!(t.cmp_fraction(connectivity(&g) as u64, 2).is_ge());
            }
        }
    }

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let s = to_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn canonical_key_survives_relabeling(g in graph(10), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            perm.swap(i, (state % (i as u64 + 1)) as usize);
        }
        prop_assert_eq!(canonical_key(&g).unwrap(), canonical_key(&g.relabel(&perm)).unwrap());
    }

    #[test]
    fn hole_or_elimination_ordering(g in graph(12)) {
        match find_hole(&g) {
            Some(h) => {
                prop_assert!(peo(&g).is_none());
                prop_assert!(Witness::Hole(h).verify(&g));
            }
            None => prop_assert!(peo(&g).is_some()),
        }
    }

    #[test]
    fn clique_tree_separators_on_random_chordal(g in graph(12)) {
        if is_chordal(&g) && g.is_connected() {
            let tree = clique_tree(&g).unwrap();
            prop_assert!(tree.validate(&g).is_ok());
            prop_assert_eq!(minimal_separators_via_clique_tree(&g, &tree).unwrap(), minimal_separators(&g));
        }
    }
}
