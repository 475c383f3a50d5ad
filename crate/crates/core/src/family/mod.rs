//! The special graphs with a vertex `v` of degree `3d+2` whose `d` spokes
//! `v s^i` are all 171-critical.
//!
//! Thick cycles `C_0..C_d` meet at `v`:
//! `C_0 = v a_1..a_19 b_1 b_2 b_3 c^0_1..c^0_5`,
//! `C_i = v t^i c^i_1..c^i_5` for `0 < i < d`,
//! `C_d = v t^d b'_3 b'_2 b'_1 a'_1..a'_19`.
//! Thick cycles `K_i = t^i s^i c~^{i-1}_5..c~^{i-1}_1` hang off `t^i`; the thin
//! edges are the spokes, the matchings `c^i_j c~^i_j` and
//! `M = {a_i a'_i} ∪ {b_i b'_i}`.

mod realize;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::drawing::{DrawingCert, ValidationReport, Violation};
use crate::graph::{is_induced_nonseparating_cycle, CyclePath, EdgeId, Graph, SpecialGraph, VertexId};

pub use realize::{convex_chord_certificate, RealizeError};

pub const A_COUNT: usize = 19;
pub const B_COUNT: usize = 3;
pub const LADDER: usize = 5;
/// Crossings of the canonical drawing, `19 choose 2`.
pub const CANONICAL_CROSSINGS: usize = A_COUNT * (A_COUNT - 1) / 2;
/// Crossings of each drawing with one spoke deleted: `57 + 3 + 110`.
pub const DELETED_CROSSINGS: usize = A_COUNT * B_COUNT + 3 + LADDER * (A_COUNT + B_COUNT);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("d must be at least 1, got {0}")]
    BadD(i64),
    #[error("k must lie in 1..={d}, got {k}")]
    BadK { k: i64, d: usize },
    #[error(transparent)]
    Realize(#[from] RealizeError),
}

/// Every named vertex and edge of an instance. Index `i` of a list holds the
/// element with subscript `i + 1` (`a[0]` is `a_1`, `s[0]` is `s^1`),
/// except that `c`, `c_tilde`, `matching` and `cycles_c` start at 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Roles {
    pub v: VertexId,
    pub a: Vec<VertexId>,
    pub a_prime: Vec<VertexId>,
    pub b: Vec<VertexId>,
    pub b_prime: Vec<VertexId>,
    pub c: Vec<Vec<VertexId>>,
    pub c_tilde: Vec<Vec<VertexId>>,
    pub s: Vec<VertexId>,
    pub t: Vec<VertexId>,
    pub cycles_c: Vec<CyclePath>,
    pub cycles_k: Vec<CyclePath>,
    pub spokes: Vec<EdgeId>,
    pub matching: Vec<Vec<EdgeId>>,
    pub m_a: Vec<EdgeId>,
    pub m_b: Vec<EdgeId>,
    /// Clockwise neighbor order at `v` in the canonical drawing.
    pub rotation_at_v: Vec<VertexId>,
}

impl Roles {
    /// `M` in order `a_1a'_1..a_19a'_19, b_1b'_1..b_3b'_3`.
    pub fn m_edges(&self) -> Vec<EdgeId> {
        self.m_a.iter().chain(&self.m_b).copied().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    pub d: usize,
    pub special: SpecialGraph,
    pub roles: Roles,
}

pub fn build_family(d: i64) -> Result<FamilyInstance, FamilyError> {
    if d < 1 {
        return Err(FamilyError::BadD(d));
    }
    let d = d as usize;
    let mut g = Graph::new();
    let v = g.add_labeled_vertex("v");
    let a: Vec<VertexId> = (1..=A_COUNT).map(|i| g.add_labeled_vertex(format!("a_{i}"))).collect();
    let b: Vec<VertexId> = (1..=B_COUNT).map(|i| g.add_labeled_vertex(format!("b_{i}"))).collect();
    let mut c: Vec<Vec<VertexId>> = vec![(1..=LADDER).map(|j| g.add_labeled_vertex(format!("c^0_{j}"))).collect()];
    let mut t = Vec::with_capacity(d);
    for i in 1..d {
        t.push(g.add_labeled_vertex(format!("t^{i}")));
        c.push((1..=LADDER).map(|j| g.add_labeled_vertex(format!("c^{i}_{j}"))).collect());
    }
    t.push(g.add_labeled_vertex(format!("t^{d}")));
    let b_prime: Vec<VertexId> = {
        let mut rev: Vec<VertexId> = (1..=B_COUNT)
            .rev()
            .map(|i| g.add_labeled_vertex(format!("b'_{i}")))
            .collect();
        rev.reverse();
        rev
    };
    let a_prime: Vec<VertexId> = (1..=A_COUNT).map(|i| g.add_labeled_vertex(format!("a'_{i}"))).collect();
    let mut s = Vec::with_capacity(d);
    let mut c_tilde = Vec::with_capacity(d);
    for i in 1..=d {
        s.push(g.add_labeled_vertex(format!("s^{i}")));
        let mut row: Vec<VertexId> = (1..=LADDER)
            .rev()
            .map(|j| g.add_labeled_vertex(format!("c~^{}_{j}", i - 1)))
            .collect();
        row.reverse();
        c_tilde.push(row);
    }

    let mut cycles_c = Vec::with_capacity(d + 1);
    let mut c0 = vec![v];
    c0.extend(&a);
    c0.extend(&b);
    c0.extend(&c[0]);
    cycles_c.push(CyclePath::cycle(c0));
    for i in 1..d {
        let mut ci = vec![v, t[i - 1]];
        ci.extend(&c[i]);
        cycles_c.push(CyclePath::cycle(ci));
    }
    let mut cd = vec![v, t[d - 1]];
    cd.extend(b_prime.iter().rev());
    cd.extend(&a_prime);
    cycles_c.push(CyclePath::cycle(cd));
    let cycles_k: Vec<CyclePath> = (0..d)
        .map(|i| {
            let mut k = vec![t[i], s[i]];
            k.extend(c_tilde[i].iter().rev());
            CyclePath::cycle(k)
        })
        .collect();

    let mut special = SpecialGraph::plain(g);
    for cyc in cycles_c.iter().chain(&cycles_k) {
        for (x, y) in cyc.steps() {
            special.add_edge(x, y, true).expect("family vertices exist");
        }
    }
    let thin = |sg: &mut SpecialGraph, x: VertexId, y: VertexId| sg.add_edge(x, y, false).expect("family vertices exist");
    let spokes: Vec<EdgeId> = s.iter().map(|&si| thin(&mut special, v, si)).collect();
    let matching: Vec<Vec<EdgeId>> = (0..d)
        .map(|i| (0..LADDER).map(|j| thin(&mut special, c[i][j], c_tilde[i][j])).collect())
        .collect();
    let m_a: Vec<EdgeId> = (0..A_COUNT).map(|i| thin(&mut special, a[i], a_prime[i])).collect();
    let m_b: Vec<EdgeId> = (0..B_COUNT).map(|i| thin(&mut special, b[i], b_prime[i])).collect();

    let mut rotation_at_v = vec![a[0], c[0][LADDER - 1]];
    for i in 1..d {
        rotation_at_v.extend([s[i - 1], t[i - 1], c[i][LADDER - 1]]);
    }
    rotation_at_v.extend([s[d - 1], t[d - 1], a_prime[A_COUNT - 1]]);

    Ok(FamilyInstance {
        d,
        special,
        roles: Roles {
            v,
            a,
            a_prime,
            b,
            b_prime,
            c,
            c_tilde,
            s,
            t,
            cycles_c,
            cycles_k,
            spokes,
            matching,
            m_a,
            m_b,
            rotation_at_v,
        },
    })
}

impl FamilyInstance {
    /// Boundary walk of the face of the canonical drawing that holds the `M`
    /// edges: `v, a_1..a_19, b_1..b_3, c^0_1, c~^0_1, t^1, c^1_1, c~^1_1, t^2,
    /// .., t^d, b'_3, b'_2, b'_1, a'_1..a'_19`.
    pub fn canonical_walk(&self) -> Vec<VertexId> {
        let r = &self.roles;
        let mut w = vec![r.v];
        w.extend(&r.a);
        w.extend(&r.b);
        for i in 0..self.d {
            w.extend([r.c[i][0], r.c_tilde[i][0], r.t[i]]);
        }
        w.extend(r.b_prime.iter().rev());
        w.extend(&r.a_prime);
        w
    }

    /// Boundary walk of the chord face in the drawing of `G - v s^k`: the
    /// cycles `C_0..C_{k-1}` as in the canonical drawing, `C_k..C_d`
    /// mirrored, and `K_k` hanging off `t^k` with its ladder to `C_{k-1}`
    /// drawn through the chord face.
    pub fn deleted_walk(&self, k: usize) -> Vec<VertexId> {
        let r = &self.roles;
        let mut w = vec![r.v];
        w.extend(&r.a);
        w.extend(&r.b);
        for i in 0..k - 1 {
            w.extend([r.c[i][0], r.c_tilde[i][0], r.t[i]]);
        }
        w.extend(&r.c[k - 1]);
        w.push(r.v);
        w.extend(r.a_prime.iter().rev());
        w.extend(&r.b_prime);
        w.push(r.t[self.d - 1]);
        for i in (k..self.d).rev() {
            w.extend([r.c_tilde[i][0], r.c[i][0], r.t[i - 1]]);
        }
        w.push(r.s[k - 1]);
        w.extend(r.c_tilde[k - 1].iter().rev());
        w.push(r.t[k - 1]);
        w
    }

    /// Clockwise order at `v` in the drawing of `G - v s^k`: `a_1 c^0_5 s^1
    /// t^1 .. s^{k-1} t^{k-1} c^{k-1}_5 a'_19 t^d s^d c^{d-1}_5 t^{d-1} ..
    /// s^{k+1} c^k_5 t^k`.
    pub fn deleted_rotation_at_v(&self, k: usize) -> Vec<VertexId> {
        let r = &self.roles;
        let last = LADDER - 1;
        let mut out = vec![r.a[0], r.c[0][last]];
        for i in 1..k {
            out.extend([r.s[i - 1], r.t[i - 1], r.c[i][last]]);
        }
        out.push(r.a_prime[A_COUNT - 1]);
        for i in (k..self.d).rev() {
            out.extend([r.t[i], r.s[i], r.c[i][last]]);
        }
        out.push(r.t[k - 1]);
        out
    }

    fn check_k(&self, k: i64) -> Result<usize, FamilyError> {
        if k < 1 || k as usize > self.d {
            return Err(FamilyError::BadK { k, d: self.d });
        }
        Ok(k as usize)
    }

    /// Special graph `(G - v s^k, T)`, identifiers unchanged.
    pub fn without_spoke(&self, k: i64) -> Result<SpecialGraph, FamilyError> {
        let k = self.check_k(k)?;
        Ok(self.special.without_edge(self.roles.spokes[k - 1]))
    }

    /// Name of every role-bearing vertex and edge, for the sidecar file.
    pub fn role_table(&self) -> RoleTable {
        let r = &self.roles;
        let g = self.special.graph();
        let vertices = g
            .labeled_vertices()
            .filter_map(|(v, l)| l.map(|l| (l.to_owned(), v)))
            .collect();
        let mut edges = BTreeMap::new();
        let name = |x: VertexId| g.label(x).unwrap_or_default().to_owned();
        for &e in r.spokes.iter().chain(r.matching.iter().flatten()).chain(&r.m_a).chain(&r.m_b) {
            let ed = g.edge(e).expect("role edge");
            edges.insert(format!("{}{}", name(ed.u), name(ed.v)), e);
        }
        let cycles = r
            .cycles_c
            .iter()
            .enumerate()
            .map(|(i, c)| (format!("C_{i}"), c.vertices.clone()))
            .chain(
                r.cycles_k
                    .iter()
                    .enumerate()
                    .map(|(i, c)| (format!("K_{}", i + 1), c.vertices.clone())),
            )
            .collect();
        RoleTable {
            d: self.d,
            vertices,
            edges,
            cycles,
            rotation_at_v: r.rotation_at_v.clone(),
        }
    }
}

/// Sidecar JSON mapping role names to identifiers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoleTable {
    pub d: usize,
    pub vertices: BTreeMap<String, VertexId>,
    pub edges: BTreeMap<String, EdgeId>,
    pub cycles: BTreeMap<String, Vec<VertexId>>,
    pub rotation_at_v: Vec<VertexId>,
}

/// The drawing with 171 crossings, one for each pair of `a_i a'_i` edges.
pub fn canonical_drawing(inst: &FamilyInstance) -> Result<DrawingCert, FamilyError> {
    let walk = inst.canonical_walk();
    let chords = inst.roles.m_edges();
    Ok(convex_chord_certificate(inst.special.clone(), &walk, &chords)?)
}

/// A drawing of `(G - v s^k, T)` with 170 crossings: `a x b`, `b x b`, and
/// the five `c^{k-1}` matching edges against all of `M`.
pub fn deleted_edge_drawing(inst: &FamilyInstance, k: i64) -> Result<DrawingCert, FamilyError> {
    let base = inst.without_spoke(k)?;
    let k = k as usize;
    let walk = inst.deleted_walk(k);
    let mut chords = inst.roles.m_edges();
    chords.extend(&inst.roles.matching[k - 1]);
    Ok(convex_chord_certificate(base, &walk, &chords)?)
}

/// `P_i = c^0_i c~^0_i .. c~^0_1 t^1 c^1_1 .. c^1_i c~^1_i .. c~^1_1 t^2 .. t^d`
/// for `i = 1..5`.
pub fn witness_paths(inst: &FamilyInstance) -> Vec<CyclePath> {
    let r = &inst.roles;
    (0..LADDER)
        .map(|i| {
            let mut p = Vec::new();
            for layer in 0..inst.d {
                if layer > 0 {
                    p.extend(&r.c[layer][..=i]);
                } else {
                    p.push(r.c[0][i]);
                }
                p.extend(r.c_tilde[layer][..=i].iter().rev());
                p.push(r.t[layer]);
            }
            CyclePath::path(p)
        })
        .collect()
}

/// Re-checks every structural fact about an instance with the graph
/// predicates. Findings are `Structure` violations named by check.
pub fn verify_structure(inst: &FamilyInstance) -> ValidationReport {
    let mut out = Vec::new();
    let mut fail = |check: &str, detail: String| {
        out.push(Violation::Structure {
            check: check.to_owned(),
            detail,
        })
    };
    let d = inst.d;
    let g = inst.special.graph();
    let r = &inst.roles;
    let expect = |name: &str, got: usize, want: usize, fail: &mut dyn FnMut(&str, String)| {
        if got != want {
            fail(name, format!("expected {want}, found {got}"));
        }
    };
    expect("vertex_count", g.vertex_count(), 45 + 12 * d, &mut fail);
    expect("edge_count", g.edge_count(), 67 + 20 * d, &mut fail);
    expect("thick_count", inst.special.thick().len(), 45 + 14 * d, &mut fail);
    expect("degree_v", g.degree(r.v), 3 * d + 2, &mut fail);
    if let Some(w) = g.vertices().filter(|&w| w != r.v).find(|&w| g.degree(w) > 4) {
        fail("max_degree", format!("{w} has degree {}", g.degree(w)));
    }

    let mut lengths: Vec<usize> = vec![28];
    lengths.extend(std::iter::repeat_n(7, d - 1));
    lengths.push(24);
    let mut cycle_edges = BTreeSet::new();
    let named = r
        .cycles_c
        .iter()
        .zip(lengths)
        .enumerate()
        .map(|(i, (c, len))| (format!("C_{i}"), c, len))
        .chain(r.cycles_k.iter().enumerate().map(|(i, c)| (format!("K_{}", i + 1), c, 7)));
    for (name, c, len) in named {
        if c.len() != len {
            fail("cycle_length", format!("{name} has length {}, expected {len}", c.len()));
        }
        match c.edges_in(g) {
            Err(e) => fail("cycle", format!("{name}: {e}")),
            Ok(es) => {
                if let Some(e) = es.iter().find(|e| !inst.special.is_thick(**e)) {
                    fail("cycle_thick", format!("{name} edge {e} is thin"));
                }
                cycle_edges.extend(es);
            }
        }
        match is_induced_nonseparating_cycle(g, c) {
            Ok(true) => {}
            Ok(false) => fail("induced_nonseparating", format!("{name} is not an induced nonseparating cycle")),
            Err(e) => fail("induced_nonseparating", format!("{name}: {e}")),
        }
    }
    if &cycle_edges != inst.special.thick() {
        fail("thick_set", "T differs from the union of the cycle edges".into());
    }

    let m = r.m_edges();
    expect("m_size", m.iter().filter(|e| g.contains_edge(**e)).count(), 22, &mut fail);
    if let Some(e) = m.iter().find(|e| inst.special.is_thick(**e)) {
        fail("m_thin", format!("M edge {e} is thick"));
    }

    let rot = &r.rotation_at_v;
    expect("rotation_size", rot.len(), 3 * d + 2, &mut fail);
    let mut rot_sorted = rot.clone();
    rot_sorted.sort();
    let mut nbrs: Vec<VertexId> = g.neighbors(r.v).collect();
    nbrs.sort();
    if rot_sorted != nbrs {
        fail("rotation_neighbors", "rotation at v is not a permutation of its neighbors".into());
    }
    ValidationReport::new(0, out)
}
