use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::structure::{component_count, induced_subgraph};
use super::{EdgeId, Graph, GraphError, VertexId};

/// A path or cycle given by its vertex sequence. For a closed cycle the
/// closing edge from the last vertex back to the first is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclePath {
    pub vertices: Vec<VertexId>,
    pub closed: bool,
}

impl CyclePath {
    pub fn cycle(vertices: Vec<VertexId>) -> Self {
        CyclePath {
            vertices,
            closed: true,
        }
    }

    pub fn path(vertices: Vec<VertexId>) -> Self {
        CyclePath {
            vertices,
            closed: false,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Consecutive vertex pairs, including the closing pair of a cycle.
    pub fn steps(&self) -> Vec<(VertexId, VertexId)> {
        let mut steps: Vec<_> = self.vertices.windows(2).map(|w| (w[0], w[1])).collect();
        if self.closed && self.vertices.len() >= 2 {
            steps.push((*self.vertices.last().unwrap(), self.vertices[0]));
        }
        steps
    }

    /// Resolves each step to a graph edge, checking well-formedness: distinct
    /// vertices, every step joined by an edge, and no edge used twice (so a
    /// closed cycle on two vertices needs two parallel edges). When a step
    /// has several parallel edges the smallest unused id is taken.
    pub fn edges_in(&self, g: &Graph) -> Result<Vec<EdgeId>, GraphError> {
        let distinct: BTreeSet<_> = self.vertices.iter().collect();
        if distinct.len() != self.vertices.len() {
            return Err(GraphError::NotACycle("repeated vertex".into()));
        }
        if self.closed && self.vertices.len() < 2 {
            return Err(GraphError::NotACycle("a cycle needs at least two vertices".into()));
        }
        if let Some(&v) = self.vertices.iter().find(|v| !g.contains_vertex(**v)) {
            return Err(GraphError::UnknownVertex(v));
        }
        let mut used = BTreeSet::new();
        let mut out = Vec::new();
        for (a, b) in self.steps() {
            let e = g
                .edges_between(a, b)
                .into_iter()
                .find(|e| !used.contains(e))
                .ok_or_else(|| GraphError::NotACycle(format!("no edge between {a} and {b}")))?;
            used.insert(e);
            out.push(e);
        }
        Ok(out)
    }
}

/// Whether `c` is an induced cycle (no chords, no parallel copies of its
/// edges) whose removal leaves the graph connected. An empty remainder
/// counts as connected.
pub fn is_induced_nonseparating_cycle(g: &Graph, c: &CyclePath) -> Result<bool, GraphError> {
    if !c.closed {
        return Err(GraphError::NotACycle("path is not closed".into()));
    }
    c.edges_in(g)?;
    let on_cycle: BTreeMap<VertexId, usize> =
        c.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let len = c.vertices.len();
    let mut step_use: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (_, e) in g.edges() {
        let (Some(&i), Some(&j)) = (on_cycle.get(&e.u), on_cycle.get(&e.v)) else {
            continue;
        };
        let (i, j) = (i.min(j), i.max(j));
        let consecutive = j == i + 1 || (i == 0 && j == len - 1);
        if !consecutive {
            return Ok(false);
        }
        *step_use.entry((i, j)).or_default() += 1;
    }
    // a digon uses its single step twice by construction
    let allowed = if len == 2 { 2 } else { 1 };
    if step_use.values().any(|&k| k > allowed) {
        return Ok(false);
    }
    let rest: Vec<VertexId> = g.vertices().filter(|v| !on_cycle.contains_key(v)).collect();
    if rest.is_empty() {
        return Ok(true);
    }
    Ok(component_count(&induced_subgraph(g, &rest)) == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::standard::{standard_graph, StandardGraph};

    fn ids(v: &[u32]) -> Vec<VertexId> {
        v.iter().map(|&i| VertexId(i)).collect()
    }

    #[test]
    fn triangle_in_k4_is_induced_and_nonseparating() {
        let k4 = standard_graph(StandardGraph::Complete(4)).unwrap();
        let c = CyclePath::cycle(ids(&[0, 1, 2]));
        assert_eq!(is_induced_nonseparating_cycle(&k4, &c), Ok(true));
    }

    #[test]
    fn four_cycle_in_k4_has_chords() {
        let k4 = standard_graph(StandardGraph::Complete(4)).unwrap();
        let c = CyclePath::cycle(ids(&[0, 1, 2, 3]));
        assert_eq!(is_induced_nonseparating_cycle(&k4, &c), Ok(false));
    }

    #[test]
    fn separating_cycle() {
        // square 0-1-2-3 with pendant blobs hanging off 0 and 2
        let mut g = standard_graph(StandardGraph::Cycle(4)).unwrap();
        let x = g.add_vertex();
        let y = g.add_vertex();
        g.add_edge(VertexId(0), x).unwrap();
        g.add_edge(VertexId(2), y).unwrap();
        let c = CyclePath::cycle(ids(&[0, 1, 2, 3]));
        assert_eq!(is_induced_nonseparating_cycle(&g, &c), Ok(false));
        // joining the blobs makes it nonseparating
        g.add_edge(x, y).unwrap();
        assert_eq!(is_induced_nonseparating_cycle(&g, &c), Ok(true));
    }

    #[test]
    fn parallel_cycle_edge_breaks_inducedness() {
        let mut g = standard_graph(StandardGraph::Cycle(5)).unwrap();
        g.add_edge(VertexId(0), VertexId(1)).unwrap();
        let c = CyclePath::cycle(ids(&[0, 1, 2, 3, 4]));
        assert_eq!(is_induced_nonseparating_cycle(&g, &c), Ok(false));
    }

    #[test]
    fn non_cycles_are_rejected() {
        let g = standard_graph(StandardGraph::Cycle(5)).unwrap();
        assert!(is_induced_nonseparating_cycle(&g, &CyclePath::cycle(ids(&[0, 2, 3]))).is_err());
        assert!(is_induced_nonseparating_cycle(&g, &CyclePath::cycle(ids(&[0, 1, 1]))).is_err());
        assert!(is_induced_nonseparating_cycle(&g, &CyclePath::path(ids(&[0, 1, 2]))).is_err());
    }
}
