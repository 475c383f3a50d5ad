#![allow(dead_code)]

use std::collections::BTreeMap;

use crit_core::drawing::DrawingCert;
use crit_core::graph::{disjoint_union, standard_graph, EdgeId, Graph, SpecialGraph, StandardGraph, VertexId};
use num_rational::Ratio;

pub fn std_graph(kind: StandardGraph) -> Graph {
    standard_graph(kind).unwrap()
}

pub fn k5() -> Graph {
    std_graph(StandardGraph::Complete(5))
}

pub fn k5_pendant() -> Graph {
    let mut g = k5();
    let x = g.add_vertex();
    g.add_edge(VertexId(0), x).unwrap();
    g
}

pub fn union(a: &Graph, b: &Graph) -> Graph {
    disjoint_union(a, b).0
}

fn thick_on(g: Graph, pairs: &[(u32, u32)]) -> SpecialGraph {
    let thick: Vec<EdgeId> = pairs
        .iter()
        .map(|&(u, v)| g.edges_between(VertexId(u), VertexId(v))[0])
        .collect();
    SpecialGraph::new(g, thick).unwrap()
}

/// A corpus entry with its crossing number, `None` meaning infinite.
pub struct Case {
    pub name: &'static str,
    pub sg: SpecialGraph,
    pub cr: Option<usize>,
}

/// Small special graphs with known crossing numbers. Values for the plain
/// graphs are the textbook ones; for the thick variants a one-crossing
/// drawing avoiding the thick edges exists (edge transitivity of K5 and
/// K3,3, and the pentagram diagonals of K5).
pub fn corpus() -> Vec<Case> {
    let plain = |name, g: Graph, cr| Case {
        name,
        sg: SpecialGraph::plain(g),
        cr: Some(cr),
    };
    let k5k5 = union(&k5(), &k5());
    let mut k5k5_edge = k5k5.clone();
    let (x, y) = (k5k5_edge.add_vertex(), k5k5_edge.add_vertex());
    k5k5_edge.add_edge(x, y).unwrap();
    let all_thick = {
        let g = k5();
        let ids: Vec<EdgeId> = g.edge_ids().collect();
        SpecialGraph::new(g, ids).unwrap()
    };
    vec![
        plain("C6", std_graph(StandardGraph::Cycle(6)), 0),
        plain("K4", std_graph(StandardGraph::Complete(4)), 0),
        plain("K2,3", std_graph(StandardGraph::CompleteBipartite(2, 3)), 0),
        plain("K5", k5(), 1),
        plain("K3,3", std_graph(StandardGraph::CompleteBipartite(3, 3)), 1),
        plain("K5+pendant", k5_pendant(), 1),
        plain("K6", std_graph(StandardGraph::Complete(6)), 3),
        plain("Petersen", std_graph(StandardGraph::Petersen), 2),
        plain("K5+K5", k5k5, 2),
        plain("K5+K5+edge", k5k5_edge, 2),
        Case {
            name: "K5 one thick edge",
            sg: thick_on(k5(), &[(0, 1)]),
            cr: Some(1),
        },
        Case {
            name: "K5 thick 5-cycle",
            sg: thick_on(k5(), &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
            cr: Some(1),
        },
        Case {
            name: "K3,3 one thick edge",
            sg: thick_on(std_graph(StandardGraph::CompleteBipartite(3, 3)), &[(0, 3)]),
            cr: Some(1),
        },
        Case {
            name: "K4 all thick",
            sg: {
                let g = std_graph(StandardGraph::Complete(4));
                let ids: Vec<EdgeId> = g.edge_ids().collect();
                SpecialGraph::new(g, ids).unwrap()
            },
            cr: Some(0),
        },
        Case {
            name: "K5 all thick",
            sg: all_thick,
            cr: None,
        },
    ]
}

/// Same graph with vertex `v` renamed `perm[v]` and edges inserted in
/// reverse order under fresh ids.
pub fn relabel(sg: &SpecialGraph, perm: &[u32]) -> SpecialGraph {
    let g = sg.graph();
    let mut out = Graph::new();
    let verts: Vec<VertexId> = g.vertices().collect();
    for (i, _) in verts.iter().enumerate() {
        out.insert_vertex(VertexId(perm[i]), None).unwrap();
    }
    let index: BTreeMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut thick = Vec::new();
    let edges: Vec<_> = g.edges().collect();
    for (n, (id, e)) in edges.iter().rev().enumerate() {
        let new = EdgeId(n as u32);
        out.insert_edge(new, VertexId(perm[index[&e.u]]), VertexId(perm[index[&e.v]]))
            .unwrap();
        if sg.is_thick(*id) {
            thick.push(new);
        }
    }
    SpecialGraph::new(out, thick).unwrap()
}

type Q = Ratio<i128>;

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i128 {
    let (ax, ay) = ((a.0 - o.0) as i128, (a.1 - o.1) as i128);
    let (bx, by) = ((b.0 - o.0) as i128, (b.1 - o.1) as i128);
    ax * by - ay * bx
}

/// The drawing obtained by putting vertices at `pos` and edges on straight
/// segments, or `None` when the points are not in general position (three
/// collinear points, or two crossings at the same spot on one edge).
pub fn straight_line_cert(sg: &SpecialGraph, pos: &BTreeMap<VertexId, (i64, i64)>) -> Option<DrawingCert> {
    let pts: Vec<(i64, i64)> = pos.values().copied().collect();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if pts[i] == pts[j] {
                return None;
            }
            for k in j + 1..pts.len() {
                if cross(pts[i], pts[j], pts[k]) == 0 {
                    return None;
                }
            }
        }
    }
    let edges: Vec<_> = sg.graph().edges().collect();
    let mut along: BTreeMap<EdgeId, Vec<(Q, EdgeId)>> = BTreeMap::new();
    for (i, &(e, ee)) in edges.iter().enumerate() {
        for &(f, ff) in &edges[i + 1..] {
            if ee.shares_endpoint(&ff) {
                continue;
            }
            let (a, b, c, d) = (pos[&ee.u], pos[&ee.v], pos[&ff.u], pos[&ff.v]);
            let (o1, o2) = (cross(a, b, c), cross(a, b, d));
            let (o3, o4) = (cross(c, d, a), cross(c, d, b));
            if (o1 > 0) == (o2 > 0) || (o3 > 0) == (o4 > 0) {
                continue;
            }
            // parameters along each segment
            let te = Q::new(o3, o3 - o4);
            let tf = Q::new(o1, o1 - o2);
            along.entry(e).or_default().push((te, f));
            along.entry(f).or_default().push((tf, e));
        }
    }
    let mut seqs = BTreeMap::new();
    for (e, mut list) in along {
        list.sort();
        if list.windows(2).any(|w| w[0].0 == w[1].0) {
            return None;
        }
        seqs.insert(e, list.into_iter().map(|(_, f)| f).collect::<Vec<_>>());
    }
    Some(DrawingCert::from_edge_sequences(sg.clone(), &seqs).unwrap())
}
