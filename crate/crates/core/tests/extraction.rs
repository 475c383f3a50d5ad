mod common;

use std::collections::BTreeSet;

use common::{corpus, k5, k5_pendant, union};
use crit_core::critical::{crit_set, extract_critical, is_critical_edge, CriticalError, CrossingOracle, DeletionOrder};
use crit_core::graph::{EdgeId, SpecialGraph};
use crit_core::solver::{solve_exact, SolveLimits};

fn oracle() -> CrossingOracle {
    CrossingOracle::exact(SolveLimits::default())
}

/// Corpus graphs reaching `k` crossings, for `k` in 1 and 2.
fn instances() -> Vec<(&'static str, SpecialGraph, usize)> {
    let mut out = Vec::new();
    for case in corpus() {
        for k in 1..=2 {
            if case.cr.is_some_and(|c| c >= k) {
                out.push((case.name, case.sg.clone(), k));
            }
        }
    }
    out
}

fn edge_set(sg: &SpecialGraph) -> BTreeSet<EdgeId> {
    sg.graph().edge_ids().collect()
}

#[test]
fn pendant_is_stripped() {
    let h = extract_critical(&SpecialGraph::plain(k5_pendant()), 1, &oracle(), DeletionOrder::Ascending).unwrap();
    assert_eq!(h, SpecialGraph::plain(k5()));
}

#[test]
fn critical_graphs_are_fixed_points() {
    let o = oracle();
    let k5 = SpecialGraph::plain(k5());
    assert_eq!(extract_critical(&k5, 1, &o, DeletionOrder::Ascending).unwrap(), k5);
    let two = SpecialGraph::plain(union(&common::k5(), &common::k5()));
    assert_eq!(extract_critical(&two, 2, &o, DeletionOrder::Ascending).unwrap(), two);
}

#[test]
fn extra_edge_is_dropped() {
    let case = corpus().into_iter().find(|c| c.name == "K5+K5+edge").unwrap();
    let h = extract_critical(&case.sg, 2, &oracle(), DeletionOrder::Ascending).unwrap();
    assert_eq!(h, SpecialGraph::plain(union(&k5(), &k5())));
}

#[test]
fn below_threshold_is_an_error() {
    let c6 = corpus().into_iter().find(|c| c.name == "C6").unwrap().sg;
    assert!(matches!(
        extract_critical(&c6, 1, &oracle(), DeletionOrder::Ascending),
        Err(CriticalError::NotAboveThreshold { k: 1, .. })
    ));
}

#[test]
fn extraction_keeps_critical_edges_and_is_critical() {
    let o = oracle();
    for (name, sg, k) in instances() {
        let crit = crit_set(&sg, k, &o).unwrap();
        let orders = std::iter::once(DeletionOrder::Ascending).chain((0..10).map(DeletionOrder::Shuffled));
        for order in orders {
            let h = extract_critical(&sg, k, &o, order).unwrap();
            assert!(crit.is_subset(&edge_set(&h)), "{name} k={k} {order:?}");
            // k-crossing-critical: every thin edge of H is critical
            let value = solve_exact(&h, &SolveLimits::default()).value();
            assert_eq!(value.decides_at_least(k), Some(true), "{name} k={k}");
            for e in h.thin_edges() {
                assert_eq!(is_critical_edge(&h, e, k, &o), Ok(true), "{name} k={k} {e}");
            }
            assert_eq!(extract_critical(&h, k, &o, order).unwrap(), h, "{name} k={k} fixed point");
            assert!(h.graph().vertices().all(|v| h.graph().degree(v) > 0));
        }
    }
}

#[test]
fn critical_sets_survive_deleting_noncritical_edges() {
    let o = oracle();
    for (name, sg, k) in instances() {
        let crit = crit_set(&sg, k, &o).unwrap();
        for e in sg.thin_edges().filter(|e| !crit.contains(e)) {
            let after = crit_set(&sg.without_edge(e), k, &o).unwrap();
            assert!(crit.is_subset(&after), "{name} k={k} minus {e}");
        }
    }
}

#[test]
fn crit_set_examples() {
    let o = oracle();
    assert_eq!(crit_set(&SpecialGraph::plain(k5()), 1, &o).unwrap().len(), 10);
    let pendant = SpecialGraph::plain(k5_pendant());
    let crit = crit_set(&pendant, 1, &o).unwrap();
    assert_eq!(crit, edge_set(&SpecialGraph::plain(k5())));
    let two = SpecialGraph::plain(union(&k5(), &k5()));
    assert_eq!(crit_set(&two, 2, &o).unwrap().len(), 20);
}
