//! Labeled multigraphs, special graphs (graphs with uncrossable "thick"
//! edges), and the structural predicates the rest of the crate leans on.

mod cycle;
pub mod embedding;
pub mod json;
pub mod planarity;
pub mod standard;
pub mod structure;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cycle::{is_induced_nonseparating_cycle, CyclePath};
pub use embedding::{Dart, RotationSystem};
pub use planarity::{check_planarity, is_planar};
pub use standard::{standard_graph, StandardGraph};
pub use structure::{bipartition, component_count, components, disjoint_union, shift_graph, IdShift};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// An undirected edge. The stored `(u, v)` order is the edge's orientation
/// for anything that walks along it (crossing sequences, layouts).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    pub fn new(u: VertexId, v: VertexId) -> Self {
        Edge { u, v }
    }

    pub fn touches(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint opposite `x`. `x` must be an endpoint.
    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            debug_assert_eq!(self.v, x);
            self.u
        }
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.touches(other.u) || self.touches(other.v)
    }

    /// Endpoints as an ordered pair, smaller id first.
    pub fn key(&self) -> (VertexId, VertexId) {
        if self.u <= self.v {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }

    pub fn reversed(&self) -> Edge {
        Edge { u: self.v, v: self.u }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} already exists")]
    DuplicateVertex(VertexId),
    #[error("edge {0} already exists")]
    DuplicateEdge(EdgeId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("edge {edge} is a self-loop at {vertex}")]
    SelfLoop { edge: EdgeId, vertex: VertexId },
    #[error("invalid size parameter: {0}")]
    InvalidSize(String),
    #[error("not a cycle of the graph: {0}")]
    NotACycle(String),
}

/// Multigraph with stable vertex and edge identifiers. Parallel edges are
/// allowed; self-loops are not.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    vertices: BTreeMap<VertexId, Option<String>>,
    edges: BTreeMap<EdgeId, Edge>,
    incidence: BTreeMap<VertexId, BTreeSet<EdgeId>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// `n` unlabeled vertices with ids `0..n`.
    pub fn with_vertices(n: u32) -> Self {
        let mut g = Graph::new();
        for i in 0..n {
            g.vertices.insert(VertexId(i), None);
            g.incidence.insert(VertexId(i), BTreeSet::new());
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn next_vertex_id(&self) -> VertexId {
        self.vertices
            .keys()
            .next_back()
            .map_or(VertexId(0), |v| VertexId(v.0 + 1))
    }

    pub fn next_edge_id(&self) -> EdgeId {
        self.edges
            .keys()
            .next_back()
            .map_or(EdgeId(0), |e| EdgeId(e.0 + 1))
    }

    pub fn add_vertex(&mut self) -> VertexId {
        let id = self.next_vertex_id();
        self.vertices.insert(id, None);
        self.incidence.insert(id, BTreeSet::new());
        id
    }

    pub fn add_labeled_vertex(&mut self, label: impl Into<String>) -> VertexId {
        let id = self.add_vertex();
        self.vertices.insert(id, Some(label.into()));
        id
    }

    pub fn insert_vertex(&mut self, id: VertexId, label: Option<String>) -> Result<(), GraphError> {
        if self.vertices.contains_key(&id) {
            return Err(GraphError::DuplicateVertex(id));
        }
        self.vertices.insert(id, label);
        self.incidence.insert(id, BTreeSet::new());
        Ok(())
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId, GraphError> {
        let id = self.next_edge_id();
        self.insert_edge(id, u, v)?;
        Ok(id)
    }

    pub fn insert_edge(&mut self, id: EdgeId, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        if self.edges.contains_key(&id) {
            return Err(GraphError::DuplicateEdge(id));
        }
        if u == v {
            return Err(GraphError::SelfLoop { edge: id, vertex: u });
        }
        for x in [u, v] {
            if !self.vertices.contains_key(&x) {
                return Err(GraphError::UnknownVertex(x));
            }
        }
        self.edges.insert(id, Edge::new(u, v));
        self.incidence.get_mut(&u).unwrap().insert(id);
        self.incidence.get_mut(&v).unwrap().insert(id);
        Ok(())
    }

    pub fn remove_edge(&mut self, id: EdgeId) -> Option<Edge> {
        let edge = self.edges.remove(&id)?;
        self.incidence.get_mut(&edge.u).unwrap().remove(&id);
        self.incidence.get_mut(&edge.v).unwrap().remove(&id);
        Some(edge)
    }

    /// Removes a vertex together with its incident edges.
    pub fn remove_vertex(&mut self, id: VertexId) -> Option<Option<String>> {
        let incident: Vec<EdgeId> = self.incidence.get(&id)?.iter().copied().collect();
        for e in incident {
            self.remove_edge(e);
        }
        self.incidence.remove(&id);
        self.vertices.remove(&id)
    }

    pub fn contains_vertex(&self, id: VertexId) -> bool {
        self.vertices.contains_key(&id)
    }

    pub fn contains_edge(&self, id: EdgeId) -> bool {
        self.edges.contains_key(&id)
    }

    pub fn edge(&self, id: EdgeId) -> Option<Edge> {
        self.edges.get(&id).copied()
    }

    pub fn label(&self, id: VertexId) -> Option<&str> {
        self.vertices.get(&id).and_then(|l| l.as_deref())
    }

    pub fn set_label(&mut self, id: VertexId, label: Option<String>) -> Result<(), GraphError> {
        match self.vertices.get_mut(&id) {
            Some(slot) => {
                *slot = label;
                Ok(())
            }
            None => Err(GraphError::UnknownVertex(id)),
        }
    }

    /// Reorients an edge so that its stored tail becomes its head.
    pub fn reverse_edge(&mut self, id: EdgeId) -> Result<(), GraphError> {
        let e = self.edges.get_mut(&id).ok_or(GraphError::UnknownEdge(id))?;
        *e = e.reversed();
        Ok(())
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.keys().copied()
    }

    pub fn labeled_vertices(&self) -> impl Iterator<Item = (VertexId, Option<&str>)> + '_ {
        self.vertices.iter().map(|(&v, l)| (v, l.as_deref()))
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, Edge)> + '_ {
        self.edges.iter().map(|(&id, &e)| (id, e))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.keys().copied()
    }

    pub fn incident_edges(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.incidence.get(&v).into_iter().flatten().copied()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence.get(&v).map_or(0, |s| s.len())
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.values().map(|s| s.len()).max().unwrap_or(0)
    }

    /// Neighbors with multiplicity, in incident-edge id order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.incident_edges(v).map(move |e| self.edges[&e].other(v))
    }

    /// Edges joining `u` and `v`, in id order.
    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        self.incident_edges(u)
            .filter(|e| self.edges[e].touches(v))
            .collect()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.values().all(|e| seen.insert(e.key()))
    }

    /// Drops vertices of degree zero.
    pub fn prune_isolated(&mut self) {
        let isolated: Vec<VertexId> = self
            .incidence
            .iter()
            .filter(|(_, s)| s.is_empty())
            .map(|(&v, _)| v)
            .collect();
        for v in isolated {
            self.remove_vertex(v);
        }
    }

    /// The subgraph induced by an edge set (vertices: endpoints of those
    /// edges). Identifiers and labels are preserved.
    pub fn edge_subgraph(&self, keep: impl IntoIterator<Item = EdgeId>) -> Result<Graph, GraphError> {
        let mut h = Graph::new();
        for id in keep {
            let e = self.edge(id).ok_or(GraphError::UnknownEdge(id))?;
            for x in [e.u, e.v] {
                if !h.contains_vertex(x) {
                    h.insert_vertex(x, self.vertices[&x].clone())?;
                }
            }
            h.insert_edge(id, e.u, e.v)?;
        }
        Ok(h)
    }

    /// Multiset of endpoint pairs, sorted; two graphs with equal keys differ
    /// only in identifiers, labels and isolated vertices.
    pub fn endpoint_multiset(&self) -> Vec<(VertexId, VertexId)> {
        let mut v: Vec<_> = self.edges.values().map(Edge::key).collect();
        v.sort();
        v
    }
}

/// A graph together with a set of thick edges, which drawings may not cross.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SpecialGraph {
    graph: Graph,
    thick: BTreeSet<EdgeId>,
}

impl SpecialGraph {
    pub fn new(graph: Graph, thick: impl IntoIterator<Item = EdgeId>) -> Result<Self, GraphError> {
        let thick: BTreeSet<EdgeId> = thick.into_iter().collect();
        if let Some(&e) = thick.iter().find(|e| !graph.contains_edge(**e)) {
            return Err(GraphError::UnknownEdge(e));
        }
        Ok(SpecialGraph { graph, thick })
    }

    /// A special graph with no thick edges.
    pub fn plain(graph: Graph) -> Self {
        SpecialGraph {
            graph,
            thick: BTreeSet::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn thick(&self) -> &BTreeSet<EdgeId> {
        &self.thick
    }

    pub fn is_thick(&self, e: EdgeId) -> bool {
        self.thick.contains(&e)
    }

    pub fn thin_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.graph.edge_ids().filter(move |e| !self.thick.contains(e))
    }

    pub fn into_parts(self) -> (Graph, BTreeSet<EdgeId>) {
        (self.graph, self.thick)
    }

    pub fn set_thick(&mut self, e: EdgeId, thick: bool) -> Result<(), GraphError> {
        if !self.graph.contains_edge(e) {
            return Err(GraphError::UnknownEdge(e));
        }
        if thick {
            self.thick.insert(e);
        } else {
            self.thick.remove(&e);
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId, thick: bool) -> Result<EdgeId, GraphError> {
        let id = self.graph.add_edge(u, v)?;
        if thick {
            self.thick.insert(id);
        }
        Ok(id)
    }

    pub fn remove_edge(&mut self, e: EdgeId) -> Option<Edge> {
        self.thick.remove(&e);
        self.graph.remove_edge(e)
    }

    pub fn without_edge(&self, e: EdgeId) -> SpecialGraph {
        let mut h = self.clone();
        h.remove_edge(e);
        h
    }

    pub fn graph_mut(&mut self) -> GraphMut<'_> {
        GraphMut { inner: self }
    }

    /// Identity key for caching: endpoint multiset with thickness flags.
    /// Isolated vertices and identifiers do not contribute.
    pub fn cache_key(&self) -> Vec<(u32, u32, bool)> {
        let mut key: Vec<_> = self
            .graph
            .edges()
            .map(|(id, e)| {
                let (a, b) = e.key();
                (a.0, b.0, self.thick.contains(&id))
            })
            .collect();
        key.sort_unstable();
        key
    }

    /// A copy with every identifier moved by `shift`.
    pub fn shifted(&self, shift: IdShift) -> SpecialGraph {
        SpecialGraph {
            graph: shift_graph(&self.graph, shift),
            thick: self.thick.iter().map(|&e| shift.edge(e)).collect(),
        }
    }
}

/// Mutable view of a special graph's underlying graph that keeps the thick
/// set consistent on edge removal.
pub struct GraphMut<'a> {
    inner: &'a mut SpecialGraph,
}

impl GraphMut<'_> {
    pub fn add_vertex(&mut self) -> VertexId {
        self.inner.graph.add_vertex()
    }

    pub fn add_labeled_vertex(&mut self, label: impl Into<String>) -> VertexId {
        self.inner.graph.add_labeled_vertex(label)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId, GraphError> {
        self.inner.graph.add_edge(u, v)
    }

    pub fn remove_vertex(&mut self, v: VertexId) {
        let incident: Vec<EdgeId> = self.inner.graph.incident_edges(v).collect();
        for e in incident {
            self.inner.thick.remove(&e);
        }
        self.inner.graph.remove_vertex(v);
    }

    pub fn reverse_edge(&mut self, e: EdgeId) -> Result<(), GraphError> {
        self.inner.graph.reverse_edge(e)
    }
}

impl From<Graph> for SpecialGraph {
    fn from(g: Graph) -> Self {
        SpecialGraph::plain(g)
    }
}

/// Dense index view used by the algorithms: vertices renumbered `0..n` in id
/// order, edges listed in id order.
#[derive(Debug, Clone)]
pub struct Dense {
    pub ids: Vec<VertexId>,
    pub index: BTreeMap<VertexId, usize>,
    pub edges: Vec<(usize, usize)>,
    pub edge_ids: Vec<EdgeId>,
}

impl Dense {
    pub fn new(g: &Graph) -> Self {
        let ids: Vec<VertexId> = g.vertices().collect();
        let index: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges = Vec::with_capacity(g.edge_count());
        let mut edge_ids = Vec::with_capacity(g.edge_count());
        for (id, e) in g.edges() {
            edges.push((index[&e.u], index[&e.v]));
            edge_ids.push(id);
        }
        Dense {
            ids,
            index,
            edges,
            edge_ids,
        }
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }
}
