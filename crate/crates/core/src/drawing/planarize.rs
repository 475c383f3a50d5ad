use std::collections::BTreeMap;

use super::{CertError, CrossingId, DrawingCert};
use crate::graph::{EdgeId, Graph, VertexId};

/// A certificate's planarization: every crossing becomes a degree-4 dummy
/// vertex and every crossed edge a chain of segments through its dummies.
#[derive(Debug, Clone)]
pub struct Planarization {
    pub graph: Graph,
    /// Dummy vertex of each crossing. Dummy ids follow the largest original
    /// vertex id, so `dummies` is the only place they need to be looked up.
    pub dummies: BTreeMap<CrossingId, VertexId>,
    /// Original edge of every planarization edge. Uncrossed edges keep
    /// their id.
    pub segment_of: BTreeMap<EdgeId, EdgeId>,
    /// Segments of each original edge from its tail to its head.
    pub chains: BTreeMap<EdgeId, Vec<EdgeId>>,
}

impl Planarization {
    pub fn is_dummy(&self, v: VertexId) -> bool {
        self.dummies.values().any(|&d| d == v)
    }

    pub fn original_vertex_count(&self) -> usize {
        self.graph.vertex_count() - self.dummies.len()
    }
}

pub fn planarize(cert: &DrawingCert) -> Result<Planarization, CertError> {
    if let Some(v) = cert.order_violations().into_iter().next() {
        return Err(CertError::Malformed(v));
    }
    let base = cert.base().graph();
    let mut graph = Graph::new();
    for (v, label) in base.labeled_vertices() {
        graph.insert_vertex(v, label.map(str::to_owned))?;
    }
    let mut dummies = BTreeMap::new();
    for (id, &c) in (base.next_vertex_id().0..).zip(cert.crossings().keys()) {
        let d = VertexId(id);
        graph.insert_vertex(d, None)?;
        dummies.insert(c, d);
    }

    let mut next_edge = base.next_edge_id().0;
    let mut segment_of = BTreeMap::new();
    let mut chains = BTreeMap::new();
    for (id, e) in base.edges() {
        let order = cert.order(id);
        if order.is_empty() {
            graph.insert_edge(id, e.u, e.v)?;
            segment_of.insert(id, id);
            chains.insert(id, vec![id]);
            continue;
        }
        let stops = std::iter::once(e.u)
            .chain(order.iter().map(|c| dummies[c]))
            .chain(std::iter::once(e.v))
            .collect::<Vec<_>>();
        let mut chain = Vec::with_capacity(stops.len() - 1);
        for w in stops.windows(2) {
            let s = EdgeId(next_edge);
            next_edge += 1;
            graph.insert_edge(s, w[0], w[1])?;
            segment_of.insert(s, id);
            chain.push(s);
        }
        chains.insert(id, chain);
    }
    Ok(Planarization {
        graph,
        dummies,
        segment_of,
        chains,
    })
}
