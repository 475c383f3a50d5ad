use std::collections::{BTreeMap, HashMap};

use super::structure::UnionFind;
use super::{Dense, EdgeId, Graph, VertexId};

/// An edge traversed away from `from`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub edge: EdgeId,
    pub from: VertexId,
}

impl Dart {
    pub fn to(&self, g: &Graph) -> VertexId {
        g.edge(self.edge).expect("dart of a graph edge").other(self.from)
    }
}

/// Cyclic order of incident edges around each vertex (clockwise).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    rotation: BTreeMap<VertexId, Vec<EdgeId>>,
}

impl RotationSystem {
    pub fn from_rotation(rotation: BTreeMap<VertexId, Vec<EdgeId>>) -> Self {
        RotationSystem { rotation }
    }

    pub fn rotation(&self, v: VertexId) -> &[EdgeId] {
        self.rotation.get(&v).map_or(&[], Vec::as_slice)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.rotation.keys().copied()
    }

    /// Neighbors of `v` in rotation order.
    pub fn neighbor_order(&self, g: &Graph, v: VertexId) -> Vec<VertexId> {
        self.rotation(v)
            .iter()
            .map(|&e| g.edge(e).expect("rotation edge").other(v))
            .collect()
    }

    fn positions(&self) -> HashMap<(VertexId, EdgeId), usize> {
        let mut pos = HashMap::new();
        for (&v, order) in &self.rotation {
            for (i, &e) in order.iter().enumerate() {
                pos.insert((v, e), i);
            }
        }
        pos
    }

    /// Face successor: after arriving at `w` along `e`, leave along the edge
    /// following `e` in the rotation at `w`.
    fn successor(&self, g: &Graph, pos: &HashMap<(VertexId, EdgeId), usize>, d: Dart) -> Dart {
        let w = d.to(g);
        let order = &self.rotation[&w];
        let i = pos[&(w, d.edge)];
        Dart {
            edge: order[(i + 1) % order.len()],
            from: w,
        }
    }

    /// All faces as closed dart walks. Each dart lies on exactly one face.
    pub fn faces(&self, g: &Graph) -> Vec<Vec<Dart>> {
        let pos = self.positions();
        let mut seen: HashMap<Dart, ()> = HashMap::new();
        let mut faces = Vec::new();
        for (id, e) in g.edges() {
            for from in [e.u, e.v] {
                let start = Dart { edge: id, from };
                if seen.contains_key(&start) {
                    continue;
                }
                let mut face = Vec::new();
                let mut d = start;
                loop {
                    seen.insert(d, ());
                    face.push(d);
                    d = self.successor(g, &pos, d);
                    if d == start {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        faces
    }

    /// The face containing a given dart.
    pub fn face_of(&self, g: &Graph, start: Dart) -> Vec<Dart> {
        let pos = self.positions();
        let mut face = vec![start];
        let mut d = self.successor(g, &pos, start);
        while d != start {
            face.push(d);
            d = self.successor(g, &pos, d);
        }
        face
    }

    /// True iff every rotation is a permutation of the incident edges and the
    /// face count satisfies Euler's formula on every component, i.e. the
    /// rotation system describes a crossing-free drawing in the plane.
    pub fn is_planar_embedding_of(&self, g: &Graph) -> bool {
        for v in g.vertices() {
            let mut got: Vec<EdgeId> = self.rotation(v).to_vec();
            got.sort();
            let want: Vec<EdgeId> = g.incident_edges(v).collect();
            if got != want {
                return false;
            }
        }
        if self.rotation.keys().any(|v| !g.contains_vertex(*v)) {
            return false;
        }
        let dense = Dense::new(g);
        let mut uf = UnionFind::new(dense.n());
        for &(a, b) in &dense.edges {
            uf.union(a, b);
        }
        // per component root: (vertices, edges, faces)
        let mut tally: BTreeMap<usize, (i64, i64, i64)> = BTreeMap::new();
        for i in 0..dense.n() {
            if g.degree(dense.ids[i]) > 0 {
                tally.entry(uf.find(i)).or_default().0 += 1;
            }
        }
        for &(a, _) in &dense.edges {
            tally.entry(uf.find(a)).or_default().1 += 1;
        }
        for face in self.faces(g) {
            let root = uf.find(dense.index[&face[0].from]);
            tally.entry(root).or_default().2 += 1;
        }
        tally.values().all(|&(v, e, f)| v - e + f == 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::planarity::check_planarity;
    use crate::graph::standard::{standard_graph, StandardGraph};

    #[test]
    fn cube_has_six_faces() {
        let mut g = Graph::with_vertices(8);
        for &(a, b) in &[
            (0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6),
            (3, 7),
        ] {
            g.add_edge(VertexId(a), VertexId(b)).unwrap();
        }
        let (_, emb) = check_planarity(&g);
        let emb = emb.unwrap();
        assert_eq!(emb.faces(&g).len(), 6);
        assert!(emb.faces(&g).iter().all(|f| f.len() == 4));
    }

    #[test]
    fn wrong_rotation_fails_euler() {
        // K4 with one rotation flipped is a torus-style embedding
        let g = standard_graph(StandardGraph::Complete(4)).unwrap();
        let (_, emb) = check_planarity(&g);
        let emb = emb.unwrap();
        assert!(emb.is_planar_embedding_of(&g));
        let mut rot = emb.rotation.clone();
        let r = rot.get_mut(&VertexId(0)).unwrap();
        r.swap(0, 1);
        let bad = RotationSystem::from_rotation(rot);
        assert!(!bad.is_planar_embedding_of(&g));
    }
}
