//! Certificates from a convex placement: the listed vertices go on a convex
//! curve in walk order, the chords are straight segments, and crossings and
//! their orders are read off with exact rational arithmetic. When the walk
//! is the boundary of a face of the rest of the graph, the resulting
//! planarization is planar.
//!
//! The curve is the parabola `y = x^2` at integer `x`, with small vertical
//! offsets when three chords happen to be concurrent. Offsets below `1/2`
//! keep the second differences positive, so the placement stays convex.

use std::collections::BTreeMap;

use num_rational::Ratio;
use thiserror::Error;

use crate::drawing::{CertError, DrawingCert};
use crate::geometry::{proper_crossing, Point};
use crate::graph::{EdgeId, SpecialGraph, VertexId};

type Q = Ratio<i128>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RealizeError {
    #[error("chord endpoint {0} must occur exactly once on the walk")]
    Endpoint(VertexId),
    #[error("unknown chord {0}")]
    UnknownChord(EdgeId),
    #[error("crossings on {0} coincide; the placement is degenerate")]
    Degenerate(EdgeId),
    #[error(transparent)]
    Cert(#[from] CertError),
}

pub fn convex_chord_certificate(
    base: SpecialGraph,
    walk: &[VertexId],
    chords: &[EdgeId],
) -> Result<DrawingCert, RealizeError> {
    let mut last = None;
    for seed in 0..8 {
        match place(&base, walk, chords, seed) {
            Err(RealizeError::Degenerate(e)) => last = Some(e),
            Err(other) => return Err(other),
            Ok(sequences) => return Ok(DrawingCert::from_edge_sequences(base, &sequences)?),
        }
    }
    Err(RealizeError::Degenerate(last.expect("at least one attempt")))
}

fn offset(i: i128, seed: i128) -> Q {
    if seed == 0 {
        return Q::from_integer(0);
    }
    const P: i128 = 1009;
    Q::new((i * i * 7919 + i * 104_729 * seed + seed * 31) % P, 2 * P + 1)
}

fn place(
    base: &SpecialGraph,
    walk: &[VertexId],
    chords: &[EdgeId],
    seed: i128,
) -> Result<BTreeMap<EdgeId, Vec<EdgeId>>, RealizeError> {
    let mut slot: BTreeMap<VertexId, Option<usize>> = BTreeMap::new();
    for (i, &v) in walk.iter().enumerate() {
        slot.entry(v).and_modify(|s| *s = None).or_insert(Some(i));
    }
    let at = |v: VertexId| -> Result<Point<Q>, RealizeError> {
        let i = slot.get(&v).copied().flatten().ok_or(RealizeError::Endpoint(v))? as i128;
        Ok(Point::new(Q::from_integer(i), Q::from_integer(i * i) + offset(i, seed)))
    };
    let mut segs = Vec::with_capacity(chords.len());
    for &c in chords {
        let e = base.graph().edge(c).ok_or(RealizeError::UnknownChord(c))?;
        segs.push((c, at(e.u)?, at(e.v)?));
    }

    let mut hits: BTreeMap<EdgeId, Vec<(Q, EdgeId)>> = BTreeMap::new();
    for (i, (e, a, b)) in segs.iter().enumerate() {
        for (f, c, d) in &segs[i + 1..] {
            if let Some(s) = proper_crossing(a, b, c, d) {
                let t = proper_crossing(c, d, a, b).expect("crossing is symmetric");
                hits.entry(*e).or_default().push((s, *f));
                hits.entry(*f).or_default().push((t, *e));
            }
        }
    }
    let mut sequences = BTreeMap::new();
    for (e, mut list) in hits {
        list.sort();
        if list.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(RealizeError::Degenerate(e));
        }
        sequences.insert(e, list.into_iter().map(|(_, f)| f).collect::<Vec<_>>());
    }
    Ok(sequences)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::validate;
    use crate::graph::Graph;

    #[test]
    fn interleaved_chords_cross_once() {
        // a square 0-1-2-3 with both diagonals as chords
        let mut g = Graph::with_vertices(4);
        for i in 0..4 {
            g.add_edge(VertexId(i), VertexId((i + 1) % 4)).unwrap();
        }
        let d1 = g.add_edge(VertexId(0), VertexId(2)).unwrap();
        let d2 = g.add_edge(VertexId(1), VertexId(3)).unwrap();
        let walk: Vec<VertexId> = (0..4).map(VertexId).collect();
        let cert = convex_chord_certificate(SpecialGraph::plain(g), &walk, &[d1, d2]).unwrap();
        assert_eq!(cert.crossing_count(), 1);
        assert!(validate(&cert).valid);
    }

    #[test]
    fn repeated_endpoint_is_rejected() {
        let mut g = Graph::with_vertices(3);
        let e = g.add_edge(VertexId(0), VertexId(1)).unwrap();
        let walk = [VertexId(0), VertexId(1), VertexId(2), VertexId(0)];
        let err = convex_chord_certificate(SpecialGraph::plain(g), &walk, &[e]).unwrap_err();
        assert_eq!(err, RealizeError::Endpoint(VertexId(0)));
    }
}
