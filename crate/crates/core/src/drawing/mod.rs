//! Drawing certificates.
//!
//! A certificate lists the crossings of a drawing (each an unordered pair of
//! distinct edges) and, for every crossed edge, the order in which its
//! crossings occur from the edge's stored tail to its head. If the graph
//! obtained by turning each crossing into a degree-4 vertex is planar, a
//! drawing with exactly that many crossings exists, so a valid certificate
//! is an upper bound on the crossing number of its special graph.

pub mod codec;
pub mod layout;
mod planarize;
pub mod svg;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeId, GraphError, IdShift, SpecialGraph, VertexId};

pub use planarize::{planarize, Planarization};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CrossingId(pub u32);

impl fmt::Display for CrossingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// Unordered pair of distinct edges, stored smaller id first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Crossing {
    e1: EdgeId,
    e2: EdgeId,
}

impl Crossing {
    /// `None` for an edge crossing itself.
    pub fn new(a: EdgeId, b: EdgeId) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Crossing { e1: a, e2: b }),
            std::cmp::Ordering::Greater => Some(Crossing { e1: b, e2: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn edges(&self) -> (EdgeId, EdgeId) {
        (self.e1, self.e2)
    }

    pub fn involves(&self, e: EdgeId) -> bool {
        self.e1 == e || self.e2 == e
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertError {
    #[error("malformed certificate: {0}")]
    Malformed(Violation),
    #[error("edge {0} crosses itself")]
    SelfCrossing(EdgeId),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("certificate is not valid: {0:?}")]
    Invalid(Vec<Violation>),
}

/// A single finding of certificate or structure validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    UnknownEdge { crossing: CrossingId, edge: EdgeId },
    ThickEdgeCrossed { crossing: CrossingId, edge: EdgeId },
    AdjacentEdgesCross { crossing: CrossingId, e1: EdgeId, e2: EdgeId },
    RepeatedPair { crossing: CrossingId, first: CrossingId },
    /// A crossing missing from the order sequence of an edge it names.
    DanglingCrossing { crossing: CrossingId, edge: EdgeId },
    DuplicateOccurrence { crossing: CrossingId, edge: EdgeId },
    /// A crossing listed along an edge it does not name.
    MisplacedCrossing { crossing: CrossingId, edge: EdgeId },
    UnknownCrossing { crossing: CrossingId, edge: EdgeId },
    OrderOnUnknownEdge { edge: EdgeId },
    NonplanarPlanarization,
    Structure { check: String, detail: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnknownEdge { crossing, edge } => write!(f, "{crossing} names unknown edge {edge}"),
            Violation::ThickEdgeCrossed { crossing, edge } => {
                write!(f, "{crossing} crosses thick edge {edge}")
            }
            Violation::AdjacentEdgesCross { crossing, e1, e2 } => {
                write!(f, "{crossing} crosses adjacent edges {e1} and {e2}")
            }
            Violation::RepeatedPair { crossing, first } => {
                write!(f, "{crossing} repeats the edge pair of {first}")
            }
            Violation::DanglingCrossing { crossing, edge } => {
                write!(f, "{crossing} missing from the order of {edge}")
            }
            Violation::DuplicateOccurrence { crossing, edge } => {
                write!(f, "{crossing} listed twice along {edge}")
            }
            Violation::MisplacedCrossing { crossing, edge } => {
                write!(f, "{crossing} listed along {edge}, which it does not cross")
            }
            Violation::UnknownCrossing { crossing, edge } => {
                write!(f, "unknown {crossing} listed along {edge}")
            }
            Violation::OrderOnUnknownEdge { edge } => write!(f, "order given for unknown edge {edge}"),
            Violation::NonplanarPlanarization => write!(f, "planarization is not planar"),
            Violation::Structure { check, detail } => write!(f, "{check}: {detail}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub crossing_count: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new(crossing_count: usize, violations: Vec<Violation>) -> Self {
        ValidationReport {
            valid: violations.is_empty(),
            crossing_count,
            violations,
        }
    }
}

/// How strictly pairs of edges may cross.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Normalization {
    /// No adjacent edges cross and no pair crosses twice.
    #[default]
    Good,
    /// As `Good`, but a pair may cross more than once.
    RepeatedPairs,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrawingCert {
    base: SpecialGraph,
    crossings: BTreeMap<CrossingId, Crossing>,
    orders: BTreeMap<EdgeId, Vec<CrossingId>>,
}

impl DrawingCert {
    /// Assembles a certificate without checking it; see [`validate`].
    pub fn from_parts(
        base: SpecialGraph,
        crossings: BTreeMap<CrossingId, Crossing>,
        orders: BTreeMap<EdgeId, Vec<CrossingId>>,
    ) -> Self {
        DrawingCert {
            base,
            crossings,
            orders,
        }
    }

    /// A certificate with no crossings.
    pub fn planar(base: SpecialGraph) -> Self {
        DrawingCert::from_parts(base, BTreeMap::new(), BTreeMap::new())
    }

    /// Builds a certificate from per-edge crossing sequences given as the
    /// partner edge of each crossing, numbering crossings in order of first
    /// appearance (edges in id order). Fails if the two sides disagree.
    pub fn from_edge_sequences(
        base: SpecialGraph,
        sequences: &BTreeMap<EdgeId, Vec<EdgeId>>,
    ) -> Result<Self, CertError> {
        let mut ids: BTreeMap<Crossing, CrossingId> = BTreeMap::new();
        let mut crossings = BTreeMap::new();
        let mut orders: BTreeMap<EdgeId, Vec<CrossingId>> = BTreeMap::new();
        for (&e, partners) in sequences {
            let seq = orders.entry(e).or_default();
            for &f in partners {
                let c = Crossing::new(e, f).ok_or(CertError::SelfCrossing(e))?;
                let next = CrossingId(ids.len() as u32);
                let id = *ids.entry(c).or_insert(next);
                crossings.insert(id, c);
                seq.push(id);
            }
        }
        let cert = DrawingCert::from_parts(base, crossings, orders);
        let broken = cert.order_violations();
        if let Some(v) = broken.into_iter().next() {
            return Err(CertError::Malformed(v));
        }
        Ok(cert)
    }

    pub fn base(&self) -> &SpecialGraph {
        &self.base
    }

    pub fn crossings(&self) -> &BTreeMap<CrossingId, Crossing> {
        &self.crossings
    }

    pub fn orders(&self) -> &BTreeMap<EdgeId, Vec<CrossingId>> {
        &self.orders
    }

    pub fn order(&self, e: EdgeId) -> &[CrossingId] {
        self.orders.get(&e).map_or(&[], Vec::as_slice)
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// The set of crossing edge pairs (smaller id first).
    pub fn crossing_pairs(&self) -> BTreeSet<(EdgeId, EdgeId)> {
        self.crossings.values().map(Crossing::edges).collect()
    }

    /// The same drawing with edge `e` stored in the opposite direction.
    pub fn with_edge_reversed(&self, e: EdgeId) -> Result<Self, CertError> {
        let mut out = self.clone();
        out.base.graph_mut().reverse_edge(e)?;
        if let Some(seq) = out.orders.get_mut(&e) {
            seq.reverse();
        }
        Ok(out)
    }

    /// Renames crossing ids through `f`, which must be injective.
    pub fn rename_crossings(&self, f: impl Fn(CrossingId) -> CrossingId) -> Self {
        DrawingCert {
            base: self.base.clone(),
            crossings: self.crossings.iter().map(|(&c, &x)| (f(c), x)).collect(),
            orders: self
                .orders
                .iter()
                .map(|(&e, seq)| (e, seq.iter().map(|&c| f(c)).collect()))
                .collect(),
        }
    }

    /// Re-expresses the certificate for a relabeled copy of its base graph.
    pub fn shifted(&self, base: SpecialGraph, shift: IdShift) -> Self {
        let remap = |e: EdgeId| shift.edge(e);
        DrawingCert {
            base,
            crossings: self
                .crossings
                .iter()
                .map(|(&c, x)| {
                    let (a, b) = x.edges();
                    (c, Crossing::new(remap(a), remap(b)).expect("distinct edges stay distinct"))
                })
                .collect(),
            orders: self.orders.iter().map(|(&e, seq)| (remap(e), seq.clone())).collect(),
        }
    }

    /// Replaces the base graph, keeping crossings and orders.
    pub fn with_base(&self, base: SpecialGraph) -> Self {
        DrawingCert {
            base,
            crossings: self.crossings.clone(),
            orders: self.orders.clone(),
        }
    }

    /// Findings that make the certificate impossible to planarize: each
    /// crossing must occur exactly once along each of its two edges and
    /// nowhere else.
    pub(crate) fn order_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let g = self.base.graph();
        for (&edge, seq) in &self.orders {
            if !g.contains_edge(edge) {
                out.push(Violation::OrderOnUnknownEdge { edge });
                continue;
            }
            let mut seen = BTreeSet::new();
            for &crossing in seq {
                match self.crossings.get(&crossing) {
                    None => out.push(Violation::UnknownCrossing { crossing, edge }),
                    Some(x) if !x.involves(edge) => {
                        out.push(Violation::MisplacedCrossing { crossing, edge })
                    }
                    Some(_) => {
                        if !seen.insert(crossing) {
                            out.push(Violation::DuplicateOccurrence { crossing, edge });
                        }
                    }
                }
            }
        }
        for (&crossing, x) in &self.crossings {
            let (a, b) = x.edges();
            for edge in [a, b] {
                if !g.contains_edge(edge) {
                    out.push(Violation::UnknownEdge { crossing, edge });
                } else if !self.order(edge).contains(&crossing) {
                    out.push(Violation::DanglingCrossing { crossing, edge });
                }
            }
        }
        out
    }

    /// Findings about which pairs cross: thick edges, adjacent edges, and
    /// (under good normalization) repeated pairs.
    fn pair_violations(&self, mode: Normalization) -> Vec<Violation> {
        let mut out = Vec::new();
        let g = self.base.graph();
        let mut first_of: BTreeMap<Crossing, CrossingId> = BTreeMap::new();
        for (&crossing, x) in &self.crossings {
            let (a, b) = x.edges();
            for edge in [a, b] {
                if self.base.is_thick(edge) {
                    out.push(Violation::ThickEdgeCrossed { crossing, edge });
                }
            }
            if let (Some(ea), Some(eb)) = (g.edge(a), g.edge(b)) {
                if ea.shares_endpoint(&eb) {
                    out.push(Violation::AdjacentEdgesCross { crossing, e1: a, e2: b });
                }
            }
            if let Some(&first) = first_of.get(x) {
                if mode == Normalization::Good {
                    out.push(Violation::RepeatedPair { crossing, first });
                }
            } else {
                first_of.insert(*x, crossing);
            }
        }
        out
    }
}

/// Checks every certificate invariant and the planarity of the
/// planarization. A valid report certifies `cr(base) <= crossing_count`.
pub fn validate(cert: &DrawingCert) -> ValidationReport {
    validate_with(cert, Normalization::Good)
}

pub fn validate_with(cert: &DrawingCert, mode: Normalization) -> ValidationReport {
    let mut violations = cert.pair_violations(mode);
    let structural = cert.order_violations();
    let planarizable = structural.is_empty();
    violations.extend(structural);
    if planarizable {
        let p = planarize(cert).expect("order invariants checked above");
        if !crate::graph::is_planar(&p.graph) {
            violations.push(Violation::NonplanarPlanarization);
        }
    }
    ValidationReport::new(cert.crossing_count(), violations)
}

/// K5 drawn with its one unavoidable crossing, between the diagonals
/// `0-2` and `1-3` of the outer 4-cycle `0 1 2 3` with `4` inside.
pub fn k5_one_crossing() -> DrawingCert {
    let k5 = crate::graph::standard_graph(crate::graph::StandardGraph::Complete(5)).expect("K5");
    let d02 = k5.edges_between(VertexId(0), VertexId(2))[0];
    let d13 = k5.edges_between(VertexId(1), VertexId(3))[0];
    let seqs = BTreeMap::from([(d02, vec![d13]), (d13, vec![d02])]);
    DrawingCert::from_edge_sequences(SpecialGraph::plain(k5), &seqs).expect("one crossing between distinct edges")
}
