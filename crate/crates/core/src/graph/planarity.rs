//! Left-right planarity test (de Fraysseix / Rosenstiehl, in the formulation
//! of Brandes, "The Left-Right Planarity Test", 2009) with extraction of a
//! combinatorial embedding. All three DFS phases are iterative so that graphs
//! with tens of thousands of vertices do not exhaust the stack.

use std::collections::BTreeMap;

use super::embedding::RotationSystem;
use super::{Dense, EdgeId, Graph};

const NONE: usize = usize::MAX;

/// Planarity of a multigraph. Parallel edges do not affect the answer.
pub fn is_planar(g: &Graph) -> bool {
    let (n, simple, _) = simplify(g);
    is_planar_simple(n, &simple)
}

/// Planarity plus, when planar, a rotation system realizing a planar
/// embedding. Deterministic for a fixed input.
pub fn check_planarity(g: &Graph) -> (bool, Option<RotationSystem>) {
    let (n, simple, groups) = simplify(g);
    match embed_simple(n, &simple) {
        None => (false, None),
        Some(rot) => {
            let dense = Dense::new(g);
            let mut rotation = BTreeMap::new();
            for (vi, darts) in rot.iter().enumerate() {
                let v = dense.ids[vi];
                let mut order: Vec<EdgeId> = Vec::new();
                for &(edge, outgoing_from_small) in darts {
                    let group = &groups[edge];
                    // parallel copies sit side by side, mirrored at the two ends
                    if outgoing_from_small {
                        order.extend(group.iter().copied());
                    } else {
                        order.extend(group.iter().rev().copied());
                    }
                }
                rotation.insert(v, order);
            }
            (true, Some(RotationSystem::from_rotation(rotation)))
        }
    }
}

/// Collapses parallel edges. Returns the vertex count, the simple edge list
/// (dense indices, smaller index first) and, per simple edge, the original
/// edge ids it stands for.
fn simplify(g: &Graph) -> (usize, Vec<(usize, usize)>, Vec<Vec<EdgeId>>) {
    let dense = Dense::new(g);
    let mut by_pair: BTreeMap<(usize, usize), Vec<EdgeId>> = BTreeMap::new();
    for (&(a, b), &id) in dense.edges.iter().zip(&dense.edge_ids) {
        by_pair.entry((a.min(b), a.max(b))).or_default().push(id);
    }
    let (pairs, groups) = by_pair.into_iter().unzip();
    (dense.n(), pairs, groups)
}

/// Planarity of a simple graph on `0..n` given as an edge list.
pub fn is_planar_simple(n: usize, edges: &[(usize, usize)]) -> bool {
    if n > 2 && edges.len() > 3 * n - 6 {
        return false;
    }
    let mut lr = LeftRight::new(n, edges);
    lr.orient_all();
    lr.test_all()
}

/// Rotation system of a simple planar graph: for each vertex, its darts in
/// clockwise order as `(edge index, dart leaves the first listed endpoint)`.
fn embed_simple(n: usize, edges: &[(usize, usize)]) -> Option<Vec<Vec<(usize, bool)>>> {
    if n > 2 && edges.len() > 3 * n - 6 {
        return None;
    }
    let mut lr = LeftRight::new(n, edges);
    lr.orient_all();
    if !lr.test_all() {
        return None;
    }
    Some(lr.embed())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Interval {
    low: usize,
    high: usize,
}

impl Interval {
    const EMPTY: Interval = Interval { low: NONE, high: NONE };

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Debug, Clone, Copy)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LeftRight {
    n: usize,
    ends: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
    // orientation: edge runs src -> dst once oriented
    src: Vec<usize>,
    dst: Vec<usize>,
    // out-edges in discovery order, and sorted by nesting depth
    discovered: Vec<Vec<usize>>,
    out: Vec<Vec<usize>>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    roots: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    reference: Vec<usize>,
    side: Vec<i8>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<usize>,
}

impl LeftRight {
    fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let m = edges.len();
        let mut adj = vec![Vec::new(); n];
        for (i, &(a, b)) in edges.iter().enumerate() {
            debug_assert_ne!(a, b);
            adj[a].push((b, i));
            adj[b].push((a, i));
        }
        LeftRight {
            n,
            ends: edges.to_vec(),
            adj,
            src: vec![NONE; m],
            dst: vec![NONE; m],
            discovered: Vec::new(),
            out: vec![Vec::new(); n],
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            roots: Vec::new(),
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting_depth: vec![0; m],
            reference: vec![NONE; m],
            side: vec![1; m],
            stack: Vec::new(),
            stack_bottom: vec![0; m],
            lowpt_edge: vec![NONE; m],
        }
    }

    fn orient_all(&mut self) {
        let mut next = vec![0usize; self.n];
        let mut resume = vec![false; self.n];
        for root in 0..self.n {
            if self.height[root] != NONE {
                continue;
            }
            self.height[root] = 0;
            self.roots.push(root);
            let mut dfs = vec![root];
            while let Some(v) = dfs.pop() {
                let e = self.parent_edge[v];
                while next[v] < self.adj[v].len() {
                    let (w, ei) = self.adj[v][next[v]];
                    if resume[v] {
                        resume[v] = false;
                    } else {
                        if self.src[ei] != NONE {
                            next[v] += 1;
                            continue;
                        }
                        self.src[ei] = v;
                        self.dst[ei] = w;
                        self.out[v].push(ei);
                        self.lowpt[ei] = self.height[v];
                        self.lowpt2[ei] = self.height[v];
                        if self.height[w] == NONE {
                            self.parent_edge[w] = ei;
                            self.height[w] = self.height[v] + 1;
                            dfs.push(v);
                            dfs.push(w);
                            resume[v] = true;
                            break;
                        }
                        self.lowpt[ei] = self.height[w];
                    }
                    self.nesting_depth[ei] = 2 * self.lowpt[ei] as i64;
                    if self.lowpt2[ei] < self.height[v] {
                        self.nesting_depth[ei] += 1;
                    }
                    if e != NONE {
                        if self.lowpt[ei] < self.lowpt[e] {
                            self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[ei]);
                            self.lowpt[e] = self.lowpt[ei];
                        } else if self.lowpt[ei] > self.lowpt[e] {
                            self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[ei]);
                        } else {
                            self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[ei]);
                        }
                    }
                    next[v] += 1;
                }
            }
        }
        self.discovered = self.out.clone();
        for v in 0..self.n {
            let nd = &self.nesting_depth;
            self.out[v].sort_by_key(|&e| nd[e]);
        }
    }

    fn conflicting(&self, iv: &Interval, b: usize) -> bool {
        !iv.is_empty() && self.lowpt[iv.high] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low];
        }
        self.lowpt[p.left.low].min(self.lowpt[p.right.low])
    }

    fn test_all(&mut self) -> bool {
        let mut next = vec![0usize; self.n];
        let mut resume = vec![false; self.n];
        let roots = std::mem::take(&mut self.roots);
        let mut ok = true;
        'roots: for &root in &roots {
            let mut dfs = vec![root];
            while let Some(v) = dfs.pop() {
                let e = self.parent_edge[v];
                let mut descended = false;
                while next[v] < self.out[v].len() {
                    let ei = self.out[v][next[v]];
                    let w = self.dst[ei];
                    if resume[v] {
                        resume[v] = false;
                    } else {
                        self.stack_bottom[ei] = self.stack.len();
                        if self.parent_edge[w] == ei {
                            dfs.push(v);
                            dfs.push(w);
                            resume[v] = true;
                            descended = true;
                            break;
                        }
                        self.lowpt_edge[ei] = ei;
                        self.stack.push(ConflictPair {
                            left: Interval::EMPTY,
                            right: Interval { low: ei, high: ei },
                        });
                    }
                    if self.lowpt[ei] < self.height[v] {
                        if ei == self.out[v][0] {
                            self.lowpt_edge[e] = self.lowpt_edge[ei];
                        } else if !self.add_constraints(ei, e) {
                            ok = false;
                            break 'roots;
                        }
                    }
                    next[v] += 1;
                }
                if !descended && e != NONE {
                    self.remove_back_edges(e);
                }
            }
        }
        self.roots = roots;
        ok
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair {
            left: Interval::EMPTY,
            right: Interval::EMPTY,
        };
        // merge return edges of ei into p.right
        loop {
            let mut q = self.stack.pop().expect("return edges of ei are on the stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[q.right.low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        // merge conflicting return edges of earlier siblings into p.left
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if p.right.low != NONE {
                self.reference[p.right.low] = q.right.high;
            }
            if q.right.low != NONE {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.reference[p.left.low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().unwrap();
            if p.left.low != NONE {
                self.side[p.left.low] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while p.left.high != NONE && self.dst[p.left.high] == u {
                p.left.high = self.reference[p.left.high];
            }
            if p.left.high == NONE && p.left.low != NONE {
                self.reference[p.left.low] = p.right.low;
                self.side[p.left.low] = -1;
                p.left.low = NONE;
            }
            while p.right.high != NONE && self.dst[p.right.high] == u {
                p.right.high = self.reference[p.right.high];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.reference[p.right.low] = p.left.low;
                self.side[p.right.low] = -1;
                p.right.low = NONE;
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().expect("e has a return edge");
            let (hl, hr) = (top.left.high, top.right.high);
            self.reference[e] =
                if hl != NONE && (hr == NONE || self.lowpt[hl] > self.lowpt[hr]) { hl } else { hr };
        }
    }

    fn sign(&mut self, e: usize, old_ref: &mut [usize]) -> i8 {
        let mut dfs = vec![e];
        while let Some(x) = dfs.pop() {
            if self.reference[x] != NONE {
                dfs.push(x);
                dfs.push(self.reference[x]);
                old_ref[x] = self.reference[x];
                self.reference[x] = NONE;
            } else if old_ref[x] != NONE {
                self.side[x] *= self.side[old_ref[x]];
                old_ref[x] = NONE;
            }
        }
        self.side[e]
    }

    fn embed(&mut self) -> Vec<Vec<(usize, bool)>> {
        let m = self.ends.len();
        let mut old_ref = vec![NONE; m];
        for ei in 0..m {
            let s = self.sign(ei, &mut old_ref) as i64;
            self.nesting_depth[ei] *= s;
        }
        let mut out = self.discovered.clone();
        for list in out.iter_mut() {
            let nd = &self.nesting_depth;
            list.sort_by_key(|&e| nd[e]);
        }
        self.out = out;

        let mut half = HalfEdges::new(self.n, m);
        for v in 0..self.n {
            let mut prev = NONE;
            for &ei in &self.out[v] {
                let d = self.dart(ei, v);
                half.add_cw(v, d, prev);
                prev = d;
            }
        }
        let mut left_ref = vec![NONE; self.n];
        let mut right_ref = vec![NONE; self.n];
        let mut next = vec![0usize; self.n];
        for &root in &self.roots.clone() {
            let mut dfs = vec![root];
            while let Some(v) = dfs.pop() {
                while next[v] < self.out[v].len() {
                    let ei = self.out[v][next[v]];
                    next[v] += 1;
                    let w = self.dst[ei];
                    let back = self.dart(ei, w);
                    if self.parent_edge[w] == ei {
                        half.add_first(w, back);
                        let d = self.dart(ei, v);
                        left_ref[v] = d;
                        right_ref[v] = d;
                        dfs.push(v);
                        dfs.push(w);
                        break;
                    }
                    if self.side[ei] == 1 {
                        half.add_cw(w, back, right_ref[w]);
                    } else {
                        half.add_ccw(w, back, left_ref[w]);
                        left_ref[w] = back;
                    }
                }
            }
        }

        (0..self.n)
            .map(|v| {
                let mut order = Vec::new();
                let start = half.first[v];
                if start != NONE {
                    let mut d = start;
                    loop {
                        order.push((d / 2, d.is_multiple_of(2)));
                        d = half.cw[d];
                        if d == start {
                            break;
                        }
                    }
                }
                order
            })
            .collect()
    }

    /// Dart of edge `ei` leaving vertex `from`: `2ei` leaves the first listed
    /// endpoint, `2ei + 1` the second.
    fn dart(&self, ei: usize, from: usize) -> usize {
        if self.ends[ei].0 == from {
            2 * ei
        } else {
            2 * ei + 1
        }
    }
}

/// Cyclic doubly linked dart lists around each vertex.
struct HalfEdges {
    cw: Vec<usize>,
    ccw: Vec<usize>,
    first: Vec<usize>,
}

impl HalfEdges {
    fn new(n: usize, m: usize) -> Self {
        HalfEdges {
            cw: vec![NONE; 2 * m],
            ccw: vec![NONE; 2 * m],
            first: vec![NONE; n],
        }
    }

    /// Inserts `d` clockwise after `reference` at `v`.
    fn add_cw(&mut self, v: usize, d: usize, reference: usize) {
        if reference == NONE {
            self.cw[d] = d;
            self.ccw[d] = d;
            self.first[v] = d;
            return;
        }
        let after = self.cw[reference];
        self.cw[reference] = d;
        self.ccw[d] = reference;
        self.cw[d] = after;
        self.ccw[after] = d;
    }

    /// Inserts `d` counter-clockwise before `reference` at `v`.
    fn add_ccw(&mut self, v: usize, d: usize, reference: usize) {
        if reference == NONE {
            self.add_cw(v, d, NONE);
            return;
        }
        let before = self.ccw[reference];
        self.add_cw(v, d, before);
        if self.first[v] == reference {
            self.first[v] = d;
        }
    }

    fn add_first(&mut self, v: usize, d: usize) {
        let reference = self.first[v];
        self.add_ccw(v, d, reference);
    }
}
