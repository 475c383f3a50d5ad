use std::collections::{BTreeMap, VecDeque};

use super::{Dense, EdgeId, Graph, VertexId};

/// Identifier offsets applied to the right operand of [`disjoint_union`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdShift {
    pub vertex: u32,
    pub edge: u32,
}

impl IdShift {
    pub fn vertex(&self, v: VertexId) -> VertexId {
        VertexId(v.0 + self.vertex)
    }

    pub fn edge(&self, e: EdgeId) -> EdgeId {
        EdgeId(e.0 + self.edge)
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        match self.rank[a].cmp(&self.rank[b]) {
            std::cmp::Ordering::Less => self.parent[a] = b,
            std::cmp::Ordering::Greater => self.parent[b] = a,
            std::cmp::Ordering::Equal => {
                self.parent[b] = a;
                self.rank[a] += 1;
            }
        }
        true
    }
}

/// Connected components as sorted vertex lists, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<VertexId>> {
    let dense = Dense::new(g);
    let mut uf = UnionFind::new(dense.n());
    for &(a, b) in &dense.edges {
        uf.union(a, b);
    }
    let mut groups: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
    let mut order = Vec::new();
    for (i, &v) in dense.ids.iter().enumerate() {
        let r = uf.find(i);
        let slot = groups.entry(r).or_insert_with(|| {
            order.push(r);
            Vec::new()
        });
        slot.push(v);
    }
    order.into_iter().map(|r| groups.remove(&r).unwrap()).collect()
}

pub fn component_count(g: &Graph) -> usize {
    components(g).len()
}

/// The subgraph spanned by a vertex set (all edges with both ends inside).
pub fn induced_subgraph(g: &Graph, keep: &[VertexId]) -> Graph {
    let mut h = Graph::new();
    for &v in keep {
        h.insert_vertex(v, g.label(v).map(str::to_owned))
            .expect("vertex list has no duplicates");
    }
    for (id, e) in g.edges() {
        if h.contains_vertex(e.u) && h.contains_vertex(e.v) {
            h.insert_edge(id, e.u, e.v).expect("edge copied from a valid graph");
        }
    }
    h
}

/// Two-colouring of the graph if it is bipartite (colour `false`/`true`).
pub fn bipartition(g: &Graph) -> Option<BTreeMap<VertexId, bool>> {
    let mut colour: BTreeMap<VertexId, bool> = BTreeMap::new();
    for start in g.vertices() {
        if colour.contains_key(&start) {
            continue;
        }
        colour.insert(start, false);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let cx = colour[&x];
            for y in g.neighbors(x) {
                match colour.get(&y) {
                    Some(&cy) if cy == cx => return None,
                    Some(_) => {}
                    None => {
                        colour.insert(y, !cx);
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    Some(colour)
}

/// Disjoint union. The left operand keeps its identifiers; the right one is
/// shifted past the left's largest ids, and the shift is returned.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> (Graph, IdShift) {
    let shift = IdShift {
        vertex: g1.next_vertex_id().0,
        edge: g1.next_edge_id().0,
    };
    let mut out = g1.clone();
    for (v, label) in g2.labeled_vertices() {
        out.insert_vertex(shift.vertex(v), label.map(str::to_owned))
            .expect("shifted ids are fresh");
    }
    for (id, e) in g2.edges() {
        out.insert_edge(shift.edge(id), shift.vertex(e.u), shift.vertex(e.v))
            .expect("shifted ids are fresh");
    }
    (out, shift)
}

/// A copy of `g` with every identifier moved by `shift`.
pub fn shift_graph(g: &Graph, shift: IdShift) -> Graph {
    let mut out = Graph::new();
    for (v, label) in g.labeled_vertices() {
        out.insert_vertex(shift.vertex(v), label.map(str::to_owned))
            .expect("shifting keeps ids distinct");
    }
    for (id, e) in g.edges() {
        out.insert_edge(shift.edge(id), shift.vertex(e.u), shift.vertex(e.v))
            .expect("shifting keeps ids distinct");
    }
    out
}
