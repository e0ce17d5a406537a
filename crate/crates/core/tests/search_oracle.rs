//! The search against naive enumeration and the closed-form exact orders.

mod common;

use std::collections::BTreeSet;

use babi::bounds::{babi_g3_exact, babi_g4_exact};
use babi::graph::canon::canonical_graph;
use babi::search::{
    admissible, certify_cage, enumerate_nonisomorphic, exhaustive_min, SearchMode, SearchSpec,
};
use babi::BabiParams;

#[test]
fn class_sets_match_naive_filter() {
    // girth 3 is compared up to 8 vertices: at 10 the unpruned labelled
    // enumeration runs to millions of graphs per parameter set
    for s in 3..=9 {
        for r in 2..s {
            for g in 3..=6 {
                let p = BabiParams::new(r, s, g).unwrap();
                let top = if g == 3 { 8 } else { 10 };
                for v in (s + 1..=top).filter(|&v| admissible(v, &p)) {
                    let fast: BTreeSet<_> =
                        enumerate_nonisomorphic(&p, v, None).unwrap().iter().map(canonical_graph).collect();
                    assert_eq!(fast, common::naive_classes(&p, v), "{p} on {v} vertices");
                }
            }
        }
    }
}

#[test]
fn emitted_classes_are_pairwise_non_isomorphic() {
    let p = BabiParams::new(2, 3, 6).unwrap();
    let all = enumerate_nonisomorphic(&p, 12, None).unwrap();
    let forms: BTreeSet<_> = all.iter().map(canonical_graph).collect();
    assert_eq!(forms.len(), all.len());
    assert_eq!(all.len(), 9);
}

#[test]
fn exact_small_girth_orders_are_search_minima() {
    for s in 3..=5 {
        for r in 2..s {
            for (g, exact) in [(3, babi_g3_exact(r, s).unwrap().value), (4, babi_g4_exact(r, s).unwrap().value)] {
                let p = BabiParams::new(r, s, g).unwrap();
                let v_max = (exact as usize..).find(|&v| admissible(v, &p)).unwrap();
                let out = exhaustive_min(&SearchSpec::new(p, v_max).mode(SearchMode::ProveMin)).unwrap();
                assert_eq!(out.min_order, Some(exact as usize), "{p}");
                assert!(out.exhaustive);
            }
        }
    }
}

#[test]
fn inadmissible_orders_are_never_visited() {
    let p = BabiParams::new(2, 3, 6).unwrap();
    let out = exhaustive_min(&SearchSpec::new(p, 12).mode(SearchMode::ProveMin)).unwrap();
    assert!(out.refuted.iter().all(|&v| v % 4 == 0));
    let p = BabiParams::new(2, 4, 5).unwrap();
    let out = exhaustive_min(&SearchSpec::new(p, 14).mode(SearchMode::ProveMin)).unwrap();
    assert!(out.refuted.iter().all(|&v| v % 2 == 0));
}

#[test]
fn determinism_across_worker_counts() {
    let p = BabiParams::new(3, 4, 5).unwrap();
    let spec = SearchSpec::new(p, 16).mode(SearchMode::ProveMin);
    let runs: Vec<String> = [1, 2, 8].iter().map(|&t| exhaustive_min(&spec.clone().threads(t)).unwrap().to_json()).collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn certify_examples() {
    let p = BabiParams::new(2, 3, 5).unwrap();
    assert!(certify_cage(&babi::constructions::babi_235().unwrap().graph, &p).unwrap());
    // no (2,3;5)-graph has 10 vertices (the order must be divisible by 4)
    let twelve = exhaustive_min(&SearchSpec::new(p, 12).v_min(12)).unwrap().witness.unwrap();
    assert_eq!(twelve.order(), 12);
    assert!(!certify_cage(&twelve, &p).unwrap());
    let p6 = BabiParams::new(2, 3, 6).unwrap();
    assert!(certify_cage(&babi::constructions::babi_g6_pair(2).unwrap().graph, &p6).unwrap());
    assert!(certify_cage(&babi::graph::complete(4), &p).is_err());
}
