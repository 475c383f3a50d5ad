use super::{Graph, GraphError, VertexId};

/// Named graphs with canonical labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardGraph {
    /// K_n on vertices `0..n`, edges in lexicographic order.
    Complete(u32),
    /// K_{a,b}: left side `0..a`, right side `a..a+b`.
    CompleteBipartite(u32, u32),
    /// C_n through `0, 1, ..., n-1`. `n = 2` gives a digon (two parallel edges).
    Cycle(u32),
    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
    Petersen,
}

pub fn standard_graph(kind: StandardGraph) -> Result<Graph, GraphError> {
    match kind {
        StandardGraph::Complete(n) => {
            if n == 0 {
                return Err(GraphError::InvalidSize("complete graph needs n >= 1".into()));
            }
            let mut g = labeled(n, |i| i.to_string());
            for i in 0..n {
                for j in i + 1..n {
                    g.add_edge(VertexId(i), VertexId(j))?;
                }
            }
            Ok(g)
        }
        StandardGraph::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return Err(GraphError::InvalidSize(
                    "complete bipartite graph needs both sides >= 1".into(),
                ));
            }
            let mut g = labeled(a + b, |i| {
                if i < a {
                    format!("x{i}")
                } else {
                    format!("y{}", i - a)
                }
            });
            for i in 0..a {
                for j in 0..b {
                    g.add_edge(VertexId(i), VertexId(a + j))?;
                }
            }
            Ok(g)
        }
        StandardGraph::Cycle(n) => {
            if n < 2 {
                return Err(GraphError::InvalidSize(format!(
                    "cycle of length {n} would need a self-loop or be empty"
                )));
            }
            let mut g = labeled(n, |i| i.to_string());
            for i in 0..n {
                g.add_edge(VertexId(i), VertexId((i + 1) % n))?;
            }
            Ok(g)
        }
        StandardGraph::Petersen => {
            let mut g = labeled(10, |i| i.to_string());
            for i in 0..5 {
                g.add_edge(VertexId(i), VertexId((i + 1) % 5))?;
            }
            for i in 0..5 {
                g.add_edge(VertexId(i), VertexId(i + 5))?;
            }
            for i in 0..5 {
                g.add_edge(VertexId(5 + i), VertexId(5 + (i + 2) % 5))?;
            }
            Ok(g)
        }
    }
}

fn labeled(n: u32, label: impl Fn(u32) -> String) -> Graph {
    let mut g = Graph::new();
    for i in 0..n {
        g.insert_vertex(VertexId(i), Some(label(i))).unwrap();
    }
    g
}
