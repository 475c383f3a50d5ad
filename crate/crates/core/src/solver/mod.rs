//! Exact crossing numbers of small special graphs.
//!
//! Iterative deepening over good drawings: level `k` tries every set of `k`
//! crossings drawn from pairs of independent thin edges (each pair at most
//! once) and every order of the crossings along each edge that carries two
//! or more; a level succeeds when some planarization is planar.

mod search;

use std::collections::BTreeSet;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::drawing::codec::CertJson;
use crate::drawing::{validate, DrawingCert, ValidationReport};
use crate::graph::json::SchemaError;
use crate::graph::{bipartition, components, Graph, SpecialGraph, VertexId};

pub use search::independent_thin_pairs;

/// Search nodes (planarity tests) charged per second of time budget. A
/// budget is converted to a node cap up front so that outcomes depend only
/// on the limits, never on machine speed.
pub const NODES_PER_SECOND: u64 = 50_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveLimits {
    /// Largest crossing count tried. Levels above it are not searched.
    pub max_k: usize,
    pub time_budget: Option<Duration>,
    pub node_cap: Option<u64>,
    /// Worker threads. With more than one, the witness is still the first
    /// in enumeration order, but a run that hits the node cap may stop at
    /// a different point.
    pub workers: usize,
    /// Also consider drawings in which a pair of edges crosses twice.
    pub relaxed: bool,
}

impl Default for SolveLimits {
    fn default() -> Self {
        SolveLimits {
            max_k: usize::MAX,
            time_budget: None,
            node_cap: None,
            workers: 1,
            relaxed: false,
        }
    }
}

impl SolveLimits {
    pub fn with_max_k(mut self, max_k: usize) -> Self {
        self.max_k = max_k;
        self
    }

    pub fn with_node_cap(mut self, cap: u64) -> Self {
        self.node_cap = Some(cap);
        self
    }

    /// The effective node cap: the smaller of the explicit cap and the
    /// budget's node equivalent.
    pub fn effective_node_cap(&self) -> Option<u64> {
        let from_budget = self.time_budget.map(|d| {
            let nodes = d.as_secs_f64() * NODES_PER_SECOND as f64;
            nodes.min(u64::MAX as f64) as u64
        });
        match (self.node_cap, from_budget) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    /// The node cap (or the time budget mapped onto it) ran out.
    BudgetExhausted,
    /// The next level exceeds `max_k`.
    MaxK,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// The crossing number, with a drawing that attains it.
    Exact { n: usize, witness: DrawingCert },
    /// Every level below `n` was refuted before the search stopped.
    AtLeast { n: usize, reason: StopReason },
    /// No drawing leaves the thick edges uncrossed.
    Infinite,
}

/// A crossing number or bound without the witness drawing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CrValue {
    Exact(usize),
    AtLeast(usize),
    Infinite,
}

impl CrValue {
    /// Whether `cr >= k` is settled, and how.
    pub fn decides_at_least(&self, k: usize) -> Option<bool> {
        match *self {
            CrValue::Exact(n) => Some(n >= k),
            CrValue::Infinite => Some(true),
            CrValue::AtLeast(n) if n >= k => Some(true),
            CrValue::AtLeast(_) => None,
        }
    }
}

impl std::fmt::Display for CrValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CrValue::Exact(n) => write!(f, "exactly {n}"),
            CrValue::AtLeast(n) => write!(f, "at least {n}"),
            CrValue::Infinite => write!(f, "infinite"),
        }
    }
}

impl SolveOutcome {
    pub fn value(&self) -> CrValue {
        match self {
            SolveOutcome::Exact { n, .. } => CrValue::Exact(*n),
            SolveOutcome::AtLeast { n, .. } => CrValue::AtLeast(*n),
            SolveOutcome::Infinite => CrValue::Infinite,
        }
    }

    pub fn exact(&self) -> Option<usize> {
        match self {
            SolveOutcome::Exact { n, .. } => Some(*n),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&DrawingCert> {
        match self {
            SolveOutcome::Exact { witness, .. } => Some(witness),
            _ => None,
        }
    }

    /// `{"outcome":"exact|atleast|infinite","n":int,"witness":cert?}`.
    /// Infinite outcomes carry `"n": null`; bounds also name their reason.
    pub fn to_json(&self) -> Value {
        match self {
            SolveOutcome::Exact { n, witness } => json!({
                "outcome": "exact",
                "n": n,
                "witness": CertJson::from_cert(witness),
            }),
            SolveOutcome::AtLeast { n, reason } => json!({
                "outcome": "atleast",
                "n": n,
                "reason": reason,
            }),
            SolveOutcome::Infinite => json!({ "outcome": "infinite", "n": null }),
        }
    }

    pub fn from_json(value: &Value) -> Result<SolveOutcome, SchemaError> {
        let kind = value
            .get("outcome")
            .and_then(Value::as_str)
            .ok_or_else(|| SchemaError::invalid("outcome", "missing or not a string"))?;
        let n = || {
            value
                .get("n")
                .and_then(Value::as_u64)
                .map(|n| n as usize)
                .ok_or_else(|| SchemaError::invalid("n", "missing or not a nonnegative integer"))
        };
        match kind {
            "exact" => {
                let raw = value
                    .get("witness")
                    .ok_or_else(|| SchemaError::invalid("witness", "exact outcomes carry a witness"))?;
                let cj: CertJson = serde_json::from_value(raw.clone())
                    .map_err(|e| SchemaError::invalid("witness", e))?;
                Ok(SolveOutcome::Exact {
                    n: n()?,
                    witness: cj.to_cert()?,
                })
            }
            "atleast" => {
                let reason = match value.get("reason") {
                    None => StopReason::BudgetExhausted,
                    Some(r) => serde_json::from_value(r.clone()).map_err(|e| SchemaError::invalid("reason", e))?,
                };
                Ok(SolveOutcome::AtLeast { n: n()?, reason })
            }
            "infinite" => Ok(SolveOutcome::Infinite),
            other => Err(SchemaError::invalid("outcome", format!("unknown outcome {other:?}"))),
        }
    }
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("certificate is not valid")]
    InvalidCert(ValidationReport),
    #[error("certificate is for a different graph")]
    ForeignCert,
}

/// `max(0, m - 3n + 6)` for the underlying simple graph with `n >= 3`, and
/// also `m - 2n + 4` when it is bipartite. Zero when neither applies.
pub fn euler_lower_bound(g: &Graph) -> usize {
    let pairs: BTreeSet<_> = g.edges().map(|(_, e)| e.key()).collect();
    let touched: BTreeSet<VertexId> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    let n = touched.len() as i64;
    let m = pairs.len() as i64;
    if n < 3 {
        return 0;
    }
    let mut bound = m - 3 * n + 6;
    if bipartition(g).is_some() {
        bound = bound.max(m - 2 * n + 4);
    }
    bound.max(0) as usize
}

/// Sum of [`euler_lower_bound`] over connected components, which is a lower
/// bound because crossing numbers add over components.
pub fn component_lower_bound(g: &Graph) -> usize {
    components(g)
        .iter()
        .map(|c| euler_lower_bound(&crate::graph::structure::induced_subgraph(g, c)))
        .sum()
}

/// Crossing count of a valid certificate, an upper bound on the crossing
/// number of its base.
pub fn upper_bound_from_cert(cert: &DrawingCert) -> Result<usize, SolveError> {
    let report = validate(cert);
    if !report.valid {
        return Err(SolveError::InvalidCert(report));
    }
    Ok(report.crossing_count)
}

pub fn solve_exact(sg: &SpecialGraph, limits: &SolveLimits) -> SolveOutcome {
    search::run(sg, limits, None)
}

/// As [`solve_exact`], with a valid certificate for `sg` capping the search:
/// reaching its crossing count without a better drawing returns it as the
/// witness.
pub fn solve_with_upper_bound(
    sg: &SpecialGraph,
    limits: &SolveLimits,
    cert: &DrawingCert,
) -> Result<SolveOutcome, SolveError> {
    if cert.base() != sg {
        return Err(SolveError::ForeignCert);
    }
    upper_bound_from_cert(cert)?;
    Ok(search::run(sg, limits, Some(cert)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::k5_one_crossing;
    use crate::graph::{standard_graph, StandardGraph};

    fn sg(kind: StandardGraph) -> SpecialGraph {
        SpecialGraph::plain(standard_graph(kind).unwrap())
    }

    #[test]
    fn euler_bounds() {
        let b = |k| euler_lower_bound(&standard_graph(k).unwrap());
        assert_eq!(b(StandardGraph::Complete(5)), 1);
        assert_eq!(b(StandardGraph::Complete(6)), 3);
        assert_eq!(b(StandardGraph::CompleteBipartite(3, 3)), 1);
        assert_eq!(b(StandardGraph::Complete(2)), 0);
        assert_eq!(b(StandardGraph::Cycle(9)), 0);
    }

    #[test]
    fn small_exact_values() {
        let limits = SolveLimits::default();
        for (kind, want) in [
            (StandardGraph::Complete(4), 0),
            (StandardGraph::Complete(5), 1),
            (StandardGraph::CompleteBipartite(3, 3), 1),
            (StandardGraph::CompleteBipartite(2, 3), 0),
        ] {
            let out = solve_exact(&sg(kind), &limits);
            assert_eq!(out.exact(), Some(want), "{kind:?}");
            let w = out.witness().unwrap();
            assert!(validate(w).valid);
            assert_eq!(w.crossing_count(), want);
        }
    }

    #[test]
    fn all_thick_k5_is_infinite() {
        let k5 = standard_graph(StandardGraph::Complete(5)).unwrap();
        let ids: Vec<_> = k5.edge_ids().collect();
        let s = SpecialGraph::new(k5, ids).unwrap();
        assert_eq!(solve_exact(&s, &SolveLimits::default()), SolveOutcome::Infinite);
    }

    #[test]
    fn limits_give_bounds() {
        let k6 = sg(StandardGraph::Complete(6));
        let out = solve_exact(&k6, &SolveLimits::default().with_max_k(2));
        assert_eq!(out, SolveOutcome::AtLeast { n: 3, reason: StopReason::MaxK });
        let out = solve_exact(&k6, &SolveLimits::default().with_node_cap(5));
        assert_eq!(out, SolveOutcome::AtLeast { n: 3, reason: StopReason::BudgetExhausted });
        let budget = SolveLimits {
            time_budget: Some(Duration::from_millis(1)),
            ..SolveLimits::default()
        };
        assert_eq!(budget.effective_node_cap(), Some(NODES_PER_SECOND / 1000));
    }

    #[test]
    fn upper_bound_short_circuits() {
        let cert = k5_one_crossing();
        assert_eq!(upper_bound_from_cert(&cert).unwrap(), 1);
        let out = solve_with_upper_bound(cert.base(), &SolveLimits::default(), &cert).unwrap();
        assert_eq!(out.exact(), Some(1));
        assert_eq!(out.witness(), Some(&cert));
    }

    #[test]
    fn outcome_json_round_trip() {
        let out = solve_exact(&sg(StandardGraph::Complete(5)), &SolveLimits::default());
        let v = out.to_json();
        assert_eq!(v["outcome"], "exact");
        assert_eq!(v["n"], 1);
        assert_eq!(SolveOutcome::from_json(&v).unwrap(), out);
        let inf = SolveOutcome::Infinite;
        assert_eq!(SolveOutcome::from_json(&inf.to_json()).unwrap(), inf);
    }
}
