use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::CriticalError;
use crate::drawing::{validate, DrawingCert};
use crate::graph::{EdgeId, Graph, SpecialGraph, VertexId};

/// How a thick edge `xy` is replaced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GadgetStyle {
    /// `t` parallel copies of `xy`.
    Parallel,
    /// `t` new vertices, each joined to both `x` and `y`; `xy` itself goes.
    K2t,
}

impl fmt::Display for GadgetStyle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GadgetStyle::Parallel => "parallel",
            GadgetStyle::K2t => "k2t",
        })
    }
}

/// Result of [`eliminate_thick_mapped`]: the ordinary graph plus, for each
/// former thick edge, the vertices and edges that stand in for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elimination {
    pub graph: Graph,
    pub gadget_vertices: BTreeMap<EdgeId, Vec<VertexId>>,
    pub gadget_edges: BTreeMap<EdgeId, Vec<EdgeId>>,
}

/// Replaces every thick edge by a gadget that needs `t` crossings to cut
/// through. Thin edges and all vertices keep their ids; new ids are
/// allocated above the existing ones. Under `Parallel` the original edge
/// stays as the first of its copies.
pub fn eliminate_thick(sg: &SpecialGraph, t: usize, style: GadgetStyle) -> Result<Graph, CriticalError> {
    eliminate_thick_mapped(sg, t, style).map(|e| e.graph)
}

pub fn eliminate_thick_mapped(sg: &SpecialGraph, t: usize, style: GadgetStyle) -> Result<Elimination, CriticalError> {
    if t < 1 {
        return Err(CriticalError::BadT(t));
    }
    let mut g = sg.graph().clone();
    let mut gadget_vertices = BTreeMap::new();
    let mut gadget_edges = BTreeMap::new();
    for &e in sg.thick() {
        let edge = g.edge(e).expect("thick edges belong to the graph");
        let mut vs = Vec::new();
        let mut es = Vec::new();
        match style {
            GadgetStyle::Parallel => {
                es.push(e);
                for _ in 1..t {
                    es.push(g.add_edge(edge.u, edge.v).expect("endpoints exist"));
                }
            }
            GadgetStyle::K2t => {
                g.remove_edge(e);
                for _ in 0..t {
                    let w = g.add_vertex();
                    vs.push(w);
                    es.push(g.add_edge(edge.u, w).expect("endpoints exist"));
                    es.push(g.add_edge(w, edge.v).expect("endpoints exist"));
                }
            }
        }
        gadget_vertices.insert(e, vs);
        gadget_edges.insert(e, es);
    }
    Ok(Elimination {
        graph: g,
        gadget_vertices,
        gadget_edges,
    })
}

/// Carries a valid drawing of a special graph over to its eliminated
/// graph. Thick edges are uncrossed in a valid drawing, so each gadget can
/// be drawn inside a thin band around the edge it replaces; the crossings
/// and the orders along thin edges are unchanged.
pub fn lift_drawing(cert: &DrawingCert, t: usize, style: GadgetStyle) -> Result<DrawingCert, CriticalError> {
    let report = validate(cert);
    if !report.valid {
        return Err(CriticalError::InvalidCert(report.violations.len()));
    }
    let g = eliminate_thick(cert.base(), t, style)?;
    Ok(cert.with_base(SpecialGraph::plain(g)))
}
