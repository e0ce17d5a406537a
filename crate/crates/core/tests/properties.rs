//! Property-based invariants.

mod common;

use babi::graph::canon::canonical_graph;
use babi::graph::{connect_switch, girth, glue_leaves, graph6, strip_leaves, verify_babi};
use babi::{BabiParams, Girth, Graph};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            Graph::from_edges(n, edges.zip(bits).filter(|(_, keep)| *keep).map(|(e, _)| e)).unwrap()
        })
    })
}

fn arb_permuted(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn girth_matches_edge_deletion_oracle(g in arb_graph(12)) {
        prop_assert_eq!(girth(&g).finite(), common::naive_girth(&g));
    }

    #[test]
    fn graph6_round_trips(g in arb_graph(70)) {
        let text = graph6::encode_string(&g);
        prop_assert_eq!(graph6::decode(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in arb_permuted(11)) {
        prop_assert_eq!(canonical_graph(&g), canonical_graph(&g.permuted(&perm)));
    }

    #[test]
    fn switching_preserves_degrees_and_girth_floor(a in 3usize..9, b in 3usize..9) {
        let (c1, c2) = (babi::graph::cycle(a), babi::graph::cycle(b));
        let g = connect_switch(&c1, (0, 1), &c2, (0, 1)).unwrap();
        prop_assert_eq!(g.regular_degree(), Some(2));
        prop_assert_eq!(girth(&g), Girth::Finite(a + b));
    }

    #[test]
    fn leaves_glue_and_strip(g in arb_graph(9), extra in 0usize..3) {
        let s = g.degrees().into_iter().max().unwrap_or(0).max(2) + extra;
        let glued = glue_leaves(&g, s).unwrap();
        prop_assert!((0..g.order()).all(|v| glued.degree(v) == s));
        if g.min_degree() >= 2 {
            prop_assert_eq!(strip_leaves(&glued), g);
        }
    }

    #[test]
    fn certificate_census_identities(g in arb_graph(12), r in 1usize..4, extra in 1usize..3) {
        let p = BabiParams::new(r, r + extra, 3).unwrap();
        let cert = verify_babi(&g, &p);
        if cert.balanced {
            prop_assert!(cert.census.unwrap().identities_hold(&p));
        }
        prop_assert!(!cert.babi || cert.balanced);
    }
}
