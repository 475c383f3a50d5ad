use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use itertools::Itertools;
use rayon::prelude::*;

use super::{component_lower_bound, SolveLimits, SolveOutcome, StopReason};
use crate::drawing::{Crossing, CrossingId, DrawingCert};
use crate::graph::planarity::is_planar_simple;
use crate::graph::{Dense, EdgeId, SpecialGraph};

/// Unordered pairs of thin edges with no common endpoint, sorted by id.
pub fn independent_thin_pairs(sg: &SpecialGraph) -> Vec<(EdgeId, EdgeId)> {
    let g = sg.graph();
    let thin: Vec<_> = sg.thin_edges().map(|id| (id, g.edge(id).expect("thin edge"))).collect();
    let mut out = Vec::new();
    for (i, (a, ea)) in thin.iter().enumerate() {
        for (b, eb) in &thin[i + 1..] {
            if !ea.shares_endpoint(eb) {
                out.push((*a, *b));
            }
        }
    }
    out
}

enum Level {
    Found(Vec<usize>, BTreeMap<usize, Vec<usize>>),
    Exhausted,
    CapHit,
}

struct Problem {
    n: usize,
    edges: Vec<(usize, usize)>,
    edge_ids: Vec<EdgeId>,
    /// candidate pairs as edge indices
    pairs: Vec<(usize, usize)>,
    relaxed: bool,
    cap: Option<u64>,
    nodes: AtomicU64,
}

pub(super) fn run(sg: &SpecialGraph, limits: &SolveLimits, hint: Option<&DrawingCert>) -> SolveOutcome {
    let dense = Dense::new(sg.graph());
    let index: BTreeMap<EdgeId, usize> = dense.edge_ids.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let pairs = independent_thin_pairs(sg)
        .into_iter()
        .map(|(a, b)| (index[&a], index[&b]))
        .collect::<Vec<_>>();
    let problem = Problem {
        n: dense.n(),
        edges: dense.edges.clone(),
        edge_ids: dense.edge_ids.clone(),
        pairs,
        relaxed: limits.relaxed,
        cap: limits.effective_node_cap(),
        nodes: AtomicU64::new(0),
    };
    let ceiling = problem.pairs.len() * if limits.relaxed { 2 } else { 1 };
    let pool = (limits.workers > 1).then(|| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(limits.workers)
            .build()
            .expect("thread pool")
    });

    let mut k = component_lower_bound(sg.graph());
    loop {
        if let Some(h) = hint {
            if k >= h.crossing_count() {
                return SolveOutcome::Exact {
                    n: h.crossing_count(),
                    witness: h.clone(),
                };
            }
        }
        if k > ceiling {
            return SolveOutcome::Infinite;
        }
        if k > limits.max_k {
            return SolveOutcome::AtLeast {
                n: k,
                reason: StopReason::MaxK,
            };
        }
        let result = match &pool {
            Some(pool) => pool.install(|| problem.level_parallel(k)),
            None => problem.combos(k, &mut Vec::with_capacity(k), 0),
        };
        match result {
            Level::Found(chosen, orders) => {
                return SolveOutcome::Exact {
                    n: k,
                    witness: problem.cert(sg, &chosen, &orders),
                }
            }
            Level::Exhausted => k += 1,
            Level::CapHit => {
                return SolveOutcome::AtLeast {
                    n: k,
                    reason: StopReason::BudgetExhausted,
                }
            }
        }
    }
}

impl Problem {
    fn next_start(&self, i: usize) -> usize {
        if self.relaxed {
            i
        } else {
            i + 1
        }
    }

    fn level_parallel(&self, k: usize) -> Level {
        if k == 0 {
            return self.combos(0, &mut Vec::new(), 0);
        }
        (0..self.pairs.len())
            .into_par_iter()
            .find_map_first(|i| {
                let mut chosen = Vec::with_capacity(k);
                chosen.push(i);
                match self.combos(k, &mut chosen, self.next_start(i)) {
                    Level::Exhausted => None,
                    other => Some(other),
                }
            })
            .unwrap_or(Level::Exhausted)
    }

    /// Extends `chosen` (pair indices, nondecreasing) to `k` crossings.
    fn combos(&self, k: usize, chosen: &mut Vec<usize>, start: usize) -> Level {
        if chosen.len() == k {
            return self.orders(chosen);
        }
        let need = k - chosen.len();
        for i in start..self.pairs.len() {
            if !self.relaxed && self.pairs.len() - i < need {
                break;
            }
            let l = chosen.len();
            if l >= 2 && chosen[l - 1] == i && chosen[l - 2] == i {
                continue;
            }
            chosen.push(i);
            let r = self.combos(k, chosen, self.next_start(i));
            chosen.pop();
            if !matches!(r, Level::Exhausted) {
                return r;
            }
        }
        Level::Exhausted
    }

    /// Tries every combination of per-edge crossing orders.
    fn orders(&self, chosen: &[usize]) -> Level {
        let mut on_edge: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (c, &p) in chosen.iter().enumerate() {
            let (e, f) = self.pairs[p];
            on_edge.entry(e).or_default().push(c);
            on_edge.entry(f).or_default().push(c);
        }
        let multi: Vec<usize> = on_edge.iter().filter(|(_, v)| v.len() > 1).map(|(&e, _)| e).collect();
        let choices: Vec<Vec<Vec<usize>>> = multi
            .iter()
            .map(|e| {
                let base = &on_edge[e];
                base.iter().copied().permutations(base.len()).collect()
            })
            .collect();
        let mut digits = vec![0usize; multi.len()];
        loop {
            for (slot, &e) in multi.iter().enumerate() {
                on_edge.insert(e, choices[slot][digits[slot]].clone());
            }
            if let Some(cap) = self.cap {
                if self.nodes.fetch_add(1, Ordering::Relaxed) >= cap {
                    return Level::CapHit;
                }
            }
            if self.planar(chosen.len(), &on_edge) {
                return Level::Found(chosen.to_vec(), on_edge);
            }
            // odometer step
            let mut i = 0;
            loop {
                if i == digits.len() {
                    return Level::Exhausted;
                }
                digits[i] += 1;
                if digits[i] < choices[i].len() {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
        }
    }

    fn planar(&self, k: usize, on_edge: &BTreeMap<usize, Vec<usize>>) -> bool {
        let mut list = Vec::with_capacity(self.edges.len() + 2 * k);
        let mut push = |a: usize, b: usize| list.push((a.min(b), a.max(b)));
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            match on_edge.get(&i) {
                None => push(a, b),
                Some(cs) => {
                    let mut prev = a;
                    for &c in cs {
                        push(prev, self.n + c);
                        prev = self.n + c;
                    }
                    push(prev, b);
                }
            }
        }
        list.sort_unstable();
        list.dedup();
        is_planar_simple(self.n + k, &list)
    }

    fn cert(&self, sg: &SpecialGraph, chosen: &[usize], on_edge: &BTreeMap<usize, Vec<usize>>) -> DrawingCert {
        let crossings = chosen
            .iter()
            .enumerate()
            .map(|(c, &p)| {
                let (e, f) = self.pairs[p];
                let x = Crossing::new(self.edge_ids[e], self.edge_ids[f]).expect("pairs join distinct edges");
                (CrossingId(c as u32), x)
            })
            .collect();
        let orders = on_edge
            .iter()
            .map(|(&e, cs)| (self.edge_ids[e], cs.iter().map(|&c| CrossingId(c as u32)).collect()))
            .collect();
        DrawingCert::from_parts(sg.clone(), crossings, orders)
    }
}
