//! Graph JSON: `{"vertices":[{"id":0,"label":"v"}], "edges":[{"id":0,"u":0,"v":1,"thick":false}]}`.
//! The `thick` flag carries the special-graph structure; absent means thin.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{EdgeId, Graph, GraphError, SpecialGraph, VertexId};

#[derive(Debug, Error)]
pub enum SchemaError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    Invalid { path: String, message: String },
}

impl SchemaError {
    pub(crate) fn invalid(path: impl Into<String>, message: impl ToString) -> Self {
        SchemaError::Invalid {
            path: path.into(),
            message: message.to_string(),
        }
    }
}

impl From<serde_json::Error> for SchemaError {
    fn from(e: serde_json::Error) -> Self {
        SchemaError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexJson {
    pub id: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeJson {
    pub id: u32,
    pub u: u32,
    pub v: u32,
    #[serde(default)]
    pub thick: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
}

impl GraphJson {
    pub fn from_special(sg: &SpecialGraph) -> Self {
        let g = sg.graph();
        GraphJson {
            vertices: g
                .labeled_vertices()
                .map(|(v, label)| VertexJson {
                    id: v.0,
                    label: label.map(str::to_owned),
                })
                .collect(),
            edges: g
                .edges()
                .map(|(id, e)| EdgeJson {
                    id: id.0,
                    u: e.u.0,
                    v: e.v.0,
                    thick: sg.is_thick(id),
                })
                .collect(),
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphJson::from_special(&SpecialGraph::plain(g.clone()))
    }

    /// Builds the special graph, reporting the first offending entry by its
    /// position in the document (`path` is relative to this object).
    pub fn to_special(&self, path: &str) -> Result<SpecialGraph, SchemaError> {
        let mut g = Graph::new();
        for (i, vj) in self.vertices.iter().enumerate() {
            g.insert_vertex(VertexId(vj.id), vj.label.clone())
                .map_err(|e| SchemaError::invalid(format!("{path}vertices[{i}]"), e))?;
        }
        let mut thick = Vec::new();
        for (i, ej) in self.edges.iter().enumerate() {
            g.insert_edge(EdgeId(ej.id), VertexId(ej.u), VertexId(ej.v))
                .map_err(|e| SchemaError::invalid(format!("{path}edges[{i}]"), e))?;
            if ej.thick {
                thick.push(EdgeId(ej.id));
            }
        }
        SpecialGraph::new(g, thick).map_err(|e: GraphError| SchemaError::invalid(path, e))
    }
}

pub fn encode_graph(sg: &SpecialGraph) -> String {
    serde_json::to_string_pretty(&GraphJson::from_special(sg)).expect("graph JSON serializes")
}

pub fn decode_graph(text: &str) -> Result<SpecialGraph, SchemaError> {
    let raw: GraphJson = serde_json::from_str(text)?;
    raw.to_special("")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn absent_thick_flag_means_thin() {
        let sg = decode_graph(r#"{"vertices":[{"id":0},{"id":1,"label":"b"}],"edges":[{"id":3,"u":0,"v":1}]}"#)
            .unwrap();
        assert!(sg.thick().is_empty());
        assert_eq!(sg.graph().label(VertexId(1)), Some("b"));
        assert_eq!(sg.graph().edge_count(), 1);
    }

    #[test]
    fn round_trip_keeps_thickness() {
        let mut g = Graph::with_vertices(3);
        let a = g.add_edge(VertexId(0), VertexId(1)).unwrap();
        g.add_edge(VertexId(1), VertexId(2)).unwrap();
        let sg = SpecialGraph::new(g, [a]).unwrap();
        assert_eq!(decode_graph(&encode_graph(&sg)).unwrap(), sg);
    }

    #[test]
    fn diagnostics_are_positional() {
        let err = decode_graph(r#"{"vertices":[{"id":0}],"edges":[{"id":0,"u":0,"v":7}]}"#).unwrap_err();
        assert_eq!(err.to_string(), "edges[0]: unknown vertex v7");
        let err = decode_graph("{\"vertices\": [\n  {\"id\": \"x\"}]}").unwrap_err();
        assert!(matches!(err, SchemaError::Syntax { line: 2, .. }), "{err}");
        let err = decode_graph(r#"{"vertices":[{"id":0},{"id":1}],"edges":[{"id":0,"u":1,"v":1}]}"#)
            .unwrap_err();
        assert!(err.to_string().starts_with("edges[0]: edge e0 is a self-loop"));
    }
}
