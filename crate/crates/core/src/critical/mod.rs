//! Critical edges and the reductions around them: deciding whether a thin
//! edge is k-critical, shrinking a graph to a k-crossing-critical subgraph
//! that keeps every k-critical edge, replacing thick edges by dense
//! gadgets, and assembling large critical-candidate graphs with drawings.

mod assemble;
mod eliminate;

use std::collections::{BTreeSet, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::RwLock;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{EdgeId, SpecialGraph};
use crate::solver::{solve_exact, CrValue, SolveLimits, SolveOutcome};

pub use assemble::{
    assemble, assemble_with, AssembleError, AssemblyBundle, BundleComponent, ComponentKind, ComponentRecord, Copies,
    Provenance, FAMILY_GADGET_T,
};
pub use eliminate::{eliminate_thick, eliminate_thick_mapped, lift_drawing, Elimination, GadgetStyle};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CriticalError {
    #[error("edge {0} is thick")]
    ThickEdge(EdgeId),
    #[error("edge {0} is not in the graph")]
    UnknownEdge(EdgeId),
    #[error("crossing number {value} does not decide cr >= {k}{}", .edge.map(|e| format!(" after deleting {e}")).unwrap_or_default())]
    OracleInconclusive { edge: Option<EdgeId>, k: usize, value: CrValue },
    #[error("crossing number is {value}, below {k}")]
    NotAboveThreshold { k: usize, value: CrValue },
    #[error("gadget size must be at least 1, got {0}")]
    BadT(usize),
    #[error("input certificate is invalid ({0} violations)")]
    InvalidCert(usize),
}

type SolveFn = dyn Fn(&SpecialGraph, usize) -> SolveOutcome + Send + Sync;
type Cache = RwLock<HashMap<Vec<(u32, u32, bool)>, CrValue>>;

/// Crossing numbers on demand, cached by graph identity (endpoints and
/// thickness, not edge ids). Answers that leave `cr >= k` open make the
/// caller fail rather than guess.
pub struct CrossingOracle {
    solve: Box<SolveFn>,
    cache: Cache,
    calls: AtomicUsize,
}

impl CrossingOracle {
    /// The exact solver. For a threshold query `cr >= k` the search stops
    /// after level `k - 1`, since that already decides it.
    pub fn exact(limits: SolveLimits) -> Self {
        CrossingOracle::with_threshold_fn(move |sg, k| {
            let cap = k.saturating_sub(1).min(limits.max_k);
            solve_exact(sg, &limits.clone().with_max_k(cap))
        })
    }

    /// Any function from special graphs to outcomes.
    pub fn from_fn(f: impl Fn(&SpecialGraph) -> SolveOutcome + Send + Sync + 'static) -> Self {
        CrossingOracle::with_threshold_fn(move |sg, _| f(sg))
    }

    /// A function that is told the threshold being decided and may stop as
    /// soon as it can settle it.
    pub fn with_threshold_fn(f: impl Fn(&SpecialGraph, usize) -> SolveOutcome + Send + Sync + 'static) -> Self {
        CrossingOracle {
            solve: Box::new(f),
            cache: RwLock::new(HashMap::new()),
            calls: AtomicUsize::new(0),
        }
    }

    /// Number of times the underlying function ran (cache misses).
    pub fn solver_calls(&self) -> usize {
        self.calls.load(Ordering::Relaxed)
    }

    /// The best known value for `sg` that decides `cr >= k`, solving when
    /// the cache cannot.
    pub fn value_for(&self, sg: &SpecialGraph, k: usize) -> CrValue {
        let key = sg.cache_key();
        if let Some(v) = self.cache.read().expect("oracle cache").get(&key) {
            if v.decides_at_least(k).is_some() {
                return *v;
            }
        }
        self.calls.fetch_add(1, Ordering::Relaxed);
        let v = (self.solve)(sg, k).value();
        let mut cache = self.cache.write().expect("oracle cache");
        let slot = cache.entry(key).or_insert(v);
        if more_informative(v, *slot) {
            *slot = v;
        }
        v
    }

    /// Decides `cr(sg) >= k`; `edge` names the deleted edge for diagnostics.
    fn at_least(&self, sg: &SpecialGraph, k: usize, edge: Option<EdgeId>) -> Result<bool, CriticalError> {
        let value = self.value_for(sg, k);
        value
            .decides_at_least(k)
            .ok_or(CriticalError::OracleInconclusive { edge, k, value })
    }
}

fn more_informative(new: CrValue, old: CrValue) -> bool {
    match (new, old) {
        (_, CrValue::Exact(_)) | (_, CrValue::Infinite) => false,
        (CrValue::AtLeast(a), CrValue::AtLeast(b)) => a > b,
        _ => true,
    }
}

/// `cr(sg) >= k` and `cr(sg - e) < k`.
pub fn is_critical_edge(sg: &SpecialGraph, e: EdgeId, k: usize, oracle: &CrossingOracle) -> Result<bool, CriticalError> {
    if !sg.graph().contains_edge(e) {
        return Err(CriticalError::UnknownEdge(e));
    }
    if sg.is_thick(e) {
        return Err(CriticalError::ThickEdge(e));
    }
    if !oracle.at_least(sg, k, None)? {
        return Ok(false);
    }
    Ok(!oracle.at_least(&sg.without_edge(e), k, Some(e))?)
}

/// The k-critical thin edges. Deletions are checked in parallel; the first
/// inconclusive edge in id order is reported.
pub fn crit_set(sg: &SpecialGraph, k: usize, oracle: &CrossingOracle) -> Result<BTreeSet<EdgeId>, CriticalError> {
    if !oracle.at_least(sg, k, None)? {
        return Ok(BTreeSet::new());
    }
    let thin: Vec<EdgeId> = sg.thin_edges().collect();
    let verdicts: Vec<Result<bool, CriticalError>> = thin
        .par_iter()
        .map(|&e| oracle.at_least(&sg.without_edge(e), k, Some(e)).map(|stays| !stays))
        .collect();
    let mut out = BTreeSet::new();
    for (e, v) in thin.into_iter().zip(verdicts) {
        if v? {
            out.insert(e);
        }
    }
    Ok(out)
}

/// Order in which [`extract_critical`] tries deletions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DeletionOrder {
    #[default]
    Ascending,
    Shuffled(u64),
}

/// A k-crossing-critical subgraph containing every k-critical edge: thin
/// edges whose deletion keeps `cr >= k` are deleted one at a time, then
/// isolated vertices are dropped.
///
/// One pass suffices. An edge kept at some point had `cr(H - e) < k` for
/// the graph `H` of that moment, and later deletions only shrink `H`, which
/// cannot raise the crossing number.
pub fn extract_critical(
    sg: &SpecialGraph,
    k: usize,
    oracle: &CrossingOracle,
    order: DeletionOrder,
) -> Result<SpecialGraph, CriticalError> {
    let value = oracle.value_for(sg, k);
    match value.decides_at_least(k) {
        Some(true) => {}
        Some(false) => return Err(CriticalError::NotAboveThreshold { k, value }),
        None => return Err(CriticalError::OracleInconclusive { edge: None, k, value }),
    }
    let mut h = sg.clone();
    let mut scan: Vec<EdgeId> = h.thin_edges().collect();
    if let DeletionOrder::Shuffled(seed) = order {
        scan.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    for e in scan {
        let smaller = h.without_edge(e);
        if oracle.at_least(&smaller, k, Some(e))? {
            h = smaller;
        }
    }
    let (mut g, thick) = h.into_parts();
    g.prune_isolated();
    Ok(SpecialGraph::new(g, thick).expect("thick edges survive pruning"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, standard_graph, Graph, StandardGraph, VertexId};

    fn k5() -> Graph {
        standard_graph(StandardGraph::Complete(5)).unwrap()
    }

    fn k5_pendant() -> (SpecialGraph, EdgeId) {
        let mut g = k5();
        let x = g.add_vertex();
        let e = g.add_edge(VertexId(0), x).unwrap();
        (SpecialGraph::plain(g), e)
    }

    #[test]
    fn k5_edges_are_critical() {
        let oracle = CrossingOracle::exact(SolveLimits::default());
        let sg = SpecialGraph::plain(k5());
        for e in sg.graph().edge_ids() {
            assert_eq!(is_critical_edge(&sg, e, 1, &oracle), Ok(true));
        }
        assert_eq!(crit_set(&sg, 1, &oracle).unwrap().len(), 10);
    }

    #[test]
    fn pendant_edge_is_not_critical() {
        let oracle = CrossingOracle::exact(SolveLimits::default());
        let (sg, e) = k5_pendant();
        assert_eq!(is_critical_edge(&sg, e, 1, &oracle), Ok(false));
        let crit = crit_set(&sg, 1, &oracle).unwrap();
        assert_eq!(crit.len(), 10);
        assert!(!crit.contains(&e));
        let h = extract_critical(&sg, 1, &oracle, DeletionOrder::Ascending).unwrap();
        assert_eq!(h.graph().endpoint_multiset(), k5().endpoint_multiset());
        assert_eq!(h.graph().vertex_count(), 5);
    }

    #[test]
    fn planar_graph_has_no_critical_edges() {
        let oracle = CrossingOracle::exact(SolveLimits::default());
        let c6 = SpecialGraph::plain(standard_graph(StandardGraph::Cycle(6)).unwrap());
        assert_eq!(is_critical_edge(&c6, EdgeId(0), 1, &oracle), Ok(false));
        assert!(matches!(
            extract_critical(&c6, 1, &oracle, DeletionOrder::Ascending),
            Err(CriticalError::NotAboveThreshold { k: 1, .. })
        ));
    }

    #[test]
    fn thick_edges_are_rejected() {
        let oracle = CrossingOracle::exact(SolveLimits::default());
        let mut sg = SpecialGraph::plain(k5());
        sg.set_thick(EdgeId(3), true).unwrap();
        assert_eq!(is_critical_edge(&sg, EdgeId(3), 1, &oracle), Err(CriticalError::ThickEdge(EdgeId(3))));
    }

    #[test]
    fn inconclusive_answers_fail_closed() {
        let oracle = CrossingOracle::exact(SolveLimits::default().with_node_cap(0));
        let (sg, _) = k5_pendant();
        let err = crit_set(&sg, 1, &oracle).unwrap_err();
        assert!(matches!(err, CriticalError::OracleInconclusive { edge: None, k: 1, .. }), "{err}");

        // decisive on the graph itself, undecided on one deletion
        let target = EdgeId(4);
        let oracle = CrossingOracle::from_fn(move |g: &SpecialGraph| {
            if g.graph().edge_count() == 10 && !g.graph().contains_edge(target) {
                return SolveOutcome::AtLeast {
                    n: 0,
                    reason: crate::solver::StopReason::BudgetExhausted,
                };
            }
            solve_exact(g, &SolveLimits::default())
        });
        let err = crit_set(&sg, 1, &oracle).unwrap_err();
        assert_eq!(
            err,
            CriticalError::OracleInconclusive {
                edge: Some(target),
                k: 1,
                value: CrValue::AtLeast(0)
            }
        );
        assert!(err.to_string().contains("after deleting e4"));
    }

    #[test]
    fn cache_avoids_repeat_solves() {
        let oracle = CrossingOracle::exact(SolveLimits::default());
        let sg = SpecialGraph::plain(k5());
        crit_set(&sg, 1, &oracle).unwrap();
        let calls = oracle.solver_calls();
        crit_set(&sg, 1, &oracle).unwrap();
        assert_eq!(oracle.solver_calls(), calls);
    }

    #[test]
    fn two_k5_at_k2() {
        let oracle = CrossingOracle::exact(SolveLimits::default());
        let (g, _) = disjoint_union(&k5(), &k5());
        let sg = SpecialGraph::plain(g);
        assert_eq!(crit_set(&sg, 2, &oracle).unwrap().len(), 20);
        let h = extract_critical(&sg, 2, &oracle, DeletionOrder::Shuffled(7)).unwrap();
        assert_eq!(h, sg);
    }
}
