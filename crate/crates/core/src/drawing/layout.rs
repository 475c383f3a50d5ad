//! Straight-line layout of a planarization.
//!
//! Each component is extended to a triangulated disk: the outer face goes on
//! a circle, inner faces of length four or more get a new center vertex, and
//! faces whose boundary walk repeats a vertex are first surrounded by a ring
//! of fresh corner vertices so that the augmented graph stays simple. The
//! interior is then placed by Tutte's barycentric method. Extra parallel
//! copies of an edge are routed through a bend point.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;

use num_traits::{Float, FromPrimitive, ToPrimitive};
use thiserror::Error;

use super::{planarize, validate, DrawingCert, Planarization, ValidationReport};
use crate::geometry::{orient_sign_exact, Point};
use crate::graph::{check_planarity, components, Dart, EdgeId, Graph, VertexId};

#[derive(Debug, Error)]
pub enum LayoutError {
    #[error("certificate is not valid")]
    InvalidCert(ValidationReport),
    #[error("planarization is not planar")]
    Nonplanar,
    #[error("outer face selector names edge {0}, which is not in the graph")]
    UnknownEdge(EdgeId),
}

/// Which face of each component becomes the outer face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OuterFace {
    /// The face with the longest boundary walk.
    #[default]
    Largest,
    /// The largest face bordering the given edge of the base graph, in the
    /// component containing it; other components use `Largest`.
    Touching(EdgeId),
}

#[derive(Debug, Clone)]
pub struct Layout<T> {
    pub planarization: Planarization,
    /// Positions of all planarization vertices, dummies included.
    pub positions: BTreeMap<VertexId, Point<T>>,
    /// Polyline of every planarization edge from its tail to its head.
    pub routes: BTreeMap<EdgeId, Vec<Point<T>>>,
}

pub trait Coord: Float + FromPrimitive + Debug + num_traits::Signed {}
impl<T: Float + FromPrimitive + Debug + num_traits::Signed> Coord for T {}

pub fn layout<T: Coord>(cert: &DrawingCert, outer: OuterFace) -> Result<Layout<T>, LayoutError> {
    let report = validate(cert);
    if !report.valid {
        return Err(LayoutError::InvalidCert(report));
    }
    let p = planarize(cert).expect("valid certificates planarize");
    let outer_edges = match outer {
        OuterFace::Largest => None,
        OuterFace::Touching(e) => Some(p.chains.get(&e).ok_or(LayoutError::UnknownEdge(e))?.clone()),
    };
    layout_planarization(p, outer_edges.as_deref())
}

/// Lays out an already planarized graph. `outer` optionally lists edges of
/// which one must border the outer face of its component.
pub fn layout_planarization<T: Coord>(
    p: Planarization,
    outer: Option<&[EdgeId]>,
) -> Result<Layout<T>, LayoutError> {
    let g = &p.graph;
    // subdivide every parallel copy after the first
    let mut h = g.clone();
    let mut bend_of: BTreeMap<EdgeId, (VertexId, EdgeId, EdgeId)> = BTreeMap::new();
    let mut seen = BTreeSet::new();
    for (id, e) in g.edges() {
        if seen.insert(e.key()) {
            continue;
        }
        h.remove_edge(id);
        let b = h.add_vertex();
        let first = h.add_edge(e.u, b).expect("fresh vertex");
        let second = h.add_edge(b, e.v).expect("fresh vertex");
        bend_of.insert(id, (b, first, second));
    }
    let outer_h: Option<BTreeSet<EdgeId>> = outer.map(|edges| {
        edges
            .iter()
            .flat_map(|e| match bend_of.get(e) {
                Some(&(_, a, b)) => vec![a, b],
                None => vec![*e],
            })
            .collect()
    });

    let (planar, rotation) = check_planarity(&h);
    if !planar {
        return Err(LayoutError::Nonplanar);
    }
    let rotation = rotation.expect("planar graphs come with an embedding");
    let faces = rotation.faces(&h);

    let mut pos: BTreeMap<VertexId, Point<T>> = BTreeMap::new();
    let comps = components(&h);
    let mut comp_of: BTreeMap<VertexId, usize> = BTreeMap::new();
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of.insert(v, i);
        }
    }
    let mut faces_of: Vec<Vec<&Vec<Dart>>> = vec![Vec::new(); comps.len()];
    for f in &faces {
        faces_of[comp_of[&f[0].from]].push(f);
    }
    let t = |x: f64| T::from_f64(x).expect("representable");
    for (i, comp) in comps.iter().enumerate() {
        let offset = t(3.0 * i as f64);
        let placed = layout_component::<T>(&h, comp, &faces_of[i], outer_h.as_ref());
        for (v, q) in placed {
            pos.insert(v, Point::new(q.x + offset, q.y));
        }
    }

    let mut routes = BTreeMap::new();
    for (id, e) in g.edges() {
        let route = match bend_of.get(&id) {
            Some(&(b, _, _)) => vec![pos[&e.u].clone(), pos[&b].clone(), pos[&e.v].clone()],
            None => vec![pos[&e.u].clone(), pos[&e.v].clone()],
        };
        routes.insert(id, route);
    }
    let positions = g.vertices().map(|v| (v, pos[&v].clone())).collect();
    Ok(Layout {
        planarization: p,
        positions,
        routes,
    })
}

/// Positions for one connected component inside the unit disk.
fn layout_component<T: Coord>(
    h: &Graph,
    comp: &[VertexId],
    faces: &[&Vec<Dart>],
    outer: Option<&BTreeSet<EdgeId>>,
) -> Vec<(VertexId, Point<T>)> {
    let t = |x: f64| T::from_f64(x).expect("representable");
    match comp.len() {
        1 => return vec![(comp[0], Point::new(T::zero(), T::zero()))],
        2 => {
            return vec![
                (comp[0], Point::new(t(-0.5), T::zero())),
                (comp[1], Point::new(t(0.5), T::zero())),
            ]
        }
        _ => {}
    }

    let preferred = |f: &&Vec<Dart>| outer.is_some_and(|o| f.iter().any(|d| o.contains(&d.edge)));
    let outer_idx = (0..faces.len())
        .max_by_key(|&i| (preferred(&faces[i]), faces[i].len(), std::cmp::Reverse(i)))
        .expect("a component with an edge has a face");

    // augmented graph on dense indices; originals first
    let mut index: BTreeMap<VertexId, usize> = BTreeMap::new();
    for (i, &v) in comp.iter().enumerate() {
        index.insert(v, i);
    }
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); comp.len()];
    let link = |adj: &mut Vec<BTreeSet<usize>>, a: usize, b: usize| {
        adj[a].insert(b);
        adj[b].insert(a);
    };
    for &v in comp {
        for e in h.incident_edges(v) {
            let w = h.edge(e).expect("incident edge").other(v);
            link(&mut adj, index[&v], index[&w]);
        }
    }
    let fresh = |adj: &mut Vec<BTreeSet<usize>>| {
        adj.push(BTreeSet::new());
        adj.len() - 1
    };

    let mut boundary: Vec<usize> = Vec::new();
    for (fi, face) in faces.iter().enumerate() {
        let walk: Vec<usize> = face.iter().map(|d| index[&d.from]).collect();
        let simple = walk.iter().collect::<BTreeSet<_>>().len() == walk.len();
        let is_outer = fi == outer_idx;
        let rim: Vec<usize> = if simple {
            walk
        } else {
            // ring of corner vertices; corner i sits at walk[i]
            let ring: Vec<usize> = (0..walk.len()).map(|_| fresh(&mut adj)).collect();
            let l = walk.len();
            for i in 0..l {
                let j = (i + 1) % l;
                link(&mut adj, ring[i], walk[i]);
                link(&mut adj, ring[j], walk[i]);
                link(&mut adj, ring[i], ring[j]);
            }
            ring
        };
        if is_outer {
            boundary = rim;
        } else if rim.len() > 3 {
            let c = fresh(&mut adj);
            for &r in &rim {
                link(&mut adj, c, r);
            }
        }
    }

    let n = adj.len();
    let mut fixed: Vec<Option<Point<T>>> = vec![None; n];
    let l = boundary.len();
    for (i, &b) in boundary.iter().enumerate() {
        let a = std::f64::consts::TAU * i as f64 / l as f64;
        fixed[b] = Some(Point::new(t(a.cos()), t(a.sin())));
    }
    let solved = barycentric(&adj, &fixed);
    comp.iter().enumerate().map(|(i, &v)| (v, solved[i].clone())).collect()
}

/// Solves the Tutte system: every free vertex at the average of its
/// neighbors. Conjugate gradients with a Jacobi preconditioner, one solve
/// per coordinate.
fn barycentric<T: Coord>(adj: &[BTreeSet<usize>], fixed: &[Option<Point<T>>]) -> Vec<Point<T>> {
    let n = adj.len();
    let free: Vec<usize> = (0..n).filter(|&i| fixed[i].is_none()).collect();
    let mut row = vec![usize::MAX; n];
    for (r, &i) in free.iter().enumerate() {
        row[i] = r;
    }
    let deg: Vec<T> = free.iter().map(|&i| T::from_usize(adj[i].len()).unwrap()).collect();
    let apply = |x: &[T], out: &mut [T]| {
        for (r, &i) in free.iter().enumerate() {
            let mut s = deg[r] * x[r];
            for &j in &adj[i] {
                if row[j] != usize::MAX {
                    s = s - x[row[j]];
                }
            }
            out[r] = s;
        }
    };
    let mut coords: [Vec<T>; 2] = [Vec::new(), Vec::new()];
    for (axis, out) in coords.iter_mut().enumerate() {
        let b: Vec<T> = free
            .iter()
            .map(|&i| {
                adj[i].iter().filter_map(|&j| fixed[j].as_ref()).fold(T::zero(), |acc, p| {
                    acc + if axis == 0 { p.x } else { p.y }
                })
            })
            .collect();
        *out = conjugate_gradient(&apply, &b, &deg);
    }
    (0..n)
        .map(|i| match &fixed[i] {
            Some(p) => p.clone(),
            None => Point::new(coords[0][row[i]], coords[1][row[i]]),
        })
        .collect()
}

fn conjugate_gradient<T: Coord>(apply: &dyn Fn(&[T], &mut [T]), b: &[T], diag: &[T]) -> Vec<T> {
    let m = b.len();
    let dot = |a: &[T], c: &[T]| a.iter().zip(c).fold(T::zero(), |s, (&x, &y)| s + x * y);
    let mut x: Vec<T> = b.iter().zip(diag).map(|(&bi, &di)| bi / di).collect();
    let mut ax = vec![T::zero(); m];
    apply(&x, &mut ax);
    let mut r: Vec<T> = b.iter().zip(&ax).map(|(&bi, &ai)| bi - ai).collect();
    let mut z: Vec<T> = r.iter().zip(diag).map(|(&ri, &di)| ri / di).collect();
    let mut p = z.clone();
    let mut rz = dot(&r, &z);
    let tol = T::epsilon() * T::from_f64(4.0).unwrap() * dot(b, b).sqrt().max(T::one());
    let mut ap = vec![T::zero(); m];
    for _ in 0..(20 * m + 100) {
        if dot(&r, &r).sqrt() <= tol {
            break;
        }
        apply(&p, &mut ap);
        let pap = dot(&p, &ap);
        if pap <= T::zero() {
            break;
        }
        let alpha = rz / pap;
        for i in 0..m {
            x[i] = x[i] + alpha * p[i];
            r[i] = r[i] - alpha * ap[i];
        }
        for i in 0..m {
            z[i] = r[i] / diag[i];
        }
        let rz_next = dot(&r, &z);
        let beta = rz_next / rz;
        rz = rz_next;
        for i in 0..m {
            p[i] = z[i] + beta * p[i];
        }
    }
    x
}

/// Pairs of routed segments that meet anywhere other than at a shared
/// endpoint, decided with exact orientation signs. Segments are compared
/// only when their x-ranges overlap.
pub fn segment_violations<T: Coord + ToPrimitive>(layout: &Layout<T>) -> Vec<(EdgeId, EdgeId)> {
    struct Seg {
        edge: EdgeId,
        a: Point<f64>,
        b: Point<f64>,
        /// endpoint vertices when the segment ends at a graph vertex
        ends: [Option<VertexId>; 2],
    }
    let f = |p: &Point<T>| Point::new(p.x.to_f64().unwrap(), p.y.to_f64().unwrap());
    let g = &layout.planarization.graph;
    let mut segs = Vec::new();
    for (&id, route) in &layout.routes {
        let e = g.edge(id).expect("route of a graph edge");
        let k = route.len() - 1;
        for i in 0..k {
            segs.push(Seg {
                edge: id,
                a: f(&route[i]),
                b: f(&route[i + 1]),
                ends: [(i == 0).then_some(e.u), (i + 1 == k).then_some(e.v)],
            });
        }
    }
    let lo = |s: &Seg| s.a.x.min(s.b.x);
    let hi = |s: &Seg| s.a.x.max(s.b.x);
    let mut order: Vec<usize> = (0..segs.len()).collect();
    order.sort_by(|&i, &j| lo(&segs[i]).total_cmp(&lo(&segs[j])));
    let mut bad = BTreeSet::new();
    for (oi, &i) in order.iter().enumerate() {
        for &j in &order[oi + 1..] {
            if lo(&segs[j]) > hi(&segs[i]) {
                break;
            }
            let (s, u) = (&segs[i], &segs[j]);
            if s.edge == u.edge {
                continue;
            }
            if segments_conflict(&s.a, &s.b, s.ends, &u.a, &u.b, u.ends) {
                bad.insert((s.edge.min(u.edge), s.edge.max(u.edge)));
            }
        }
    }
    bad.into_iter().collect()
}

fn segments_conflict(
    a: &Point<f64>,
    b: &Point<f64>,
    ae: [Option<VertexId>; 2],
    c: &Point<f64>,
    d: &Point<f64>,
    ce: [Option<VertexId>; 2],
) -> bool {
    use std::cmp::Ordering::*;
    let shared = ae.iter().flatten().find(|v| ce.iter().flatten().any(|w| w == *v)).copied();
    if let Some(v) = shared {
        // orient both segments away from the shared vertex
        let (p, q) = if ae[0] == Some(v) { (a, b) } else { (b, a) };
        let (r, s) = if ce[0] == Some(v) { (c, d) } else { (d, c) };
        if p != r {
            return true;
        }
        if orient_sign_exact(p, q, s) != Equal {
            return false;
        }
        // collinear: overlapping iff pointing the same way
        let dot = (q.x - p.x) * (s.x - p.x) + (q.y - p.y) * (s.y - p.y);
        return dot > 0.0 || q == p || s == p;
    }
    let o1 = orient_sign_exact(a, b, c);
    let o2 = orient_sign_exact(a, b, d);
    let o3 = orient_sign_exact(c, d, a);
    let o4 = orient_sign_exact(c, d, b);
    if o1 != o2 && o3 != o4 && [o1, o2, o3, o4].iter().all(|&o| o != Equal) {
        return true;
    }
    let within = |p: &Point<f64>, q: &Point<f64>, x: &Point<f64>| {
        x.x >= p.x.min(q.x) && x.x <= p.x.max(q.x) && x.y >= p.y.min(q.y) && x.y <= p.y.max(q.y)
    };
    (o1 == Equal && within(a, b, c))
        || (o2 == Equal && within(a, b, d))
        || (o3 == Equal && within(c, d, a))
        || (o4 == Equal && within(c, d, b))
}
