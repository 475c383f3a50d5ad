use std::fs;
use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::eliminate::{lift_drawing, GadgetStyle};
use super::CriticalError;
use crate::drawing::codec::{decode_cert, encode_cert};
use crate::drawing::{k5_one_crossing, validate, Crossing, CrossingId, DrawingCert};
use crate::family::{build_family, canonical_drawing, FamilyError, CANONICAL_CROSSINGS};
use crate::graph::json::{decode_graph, encode_graph, SchemaError};
use crate::graph::{disjoint_union, Graph, IdShift, SpecialGraph};

/// Gadget size for the family: one more than its certified 171.
pub const FAMILY_GADGET_T: usize = CANONICAL_CROSSINGS + 1;

/// Number of family components in an assembly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Copies {
    /// `floor(k / 171)`.
    Auto,
    Explicit(usize),
}

#[derive(Debug, Error)]
pub enum AssembleError {
    #[error("k must be at least {CANONICAL_CROSSINGS}, got {0}")]
    KTooSmall(usize),
    #[error("{t} family copies need k >= {}, got k = {k}", t * CANONICAL_CROSSINGS)]
    TooManyCopies { k: usize, t: usize },
    #[error("copies must be at least 1")]
    NoCopies,
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Critical(#[from] CriticalError),
    #[error("component {0} does not validate")]
    Invalid(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Schema(#[from] SchemaError),
    #[error("provenance: {0}")]
    Provenance(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentKind {
    Family,
    K5,
}

/// One component of the assembled graph, with its certificate in its own
/// ids. `shift` maps those ids into the assembled graph.
#[derive(Debug, Clone)]
pub struct BundleComponent {
    pub name: String,
    pub kind: ComponentKind,
    pub cert: DrawingCert,
    pub shift: IdShift,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRecord {
    pub name: String,
    pub kind: ComponentKind,
    pub cert: String,
    pub vertex_offset: u32,
    pub edge_offset: u32,
    pub vertices: usize,
    pub edges: usize,
    pub crossings: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub k: usize,
    pub d: i64,
    pub copies: usize,
    pub k5_copies: usize,
    pub gadget_style: GadgetStyle,
    pub gadget_t: usize,
    pub certified_total: usize,
    pub components: Vec<ComponentRecord>,
    pub notes: Vec<String>,
}

/// `t` lifted family graphs next to `k - 171 t` copies of K5, each with a
/// drawing, so that the whole has a drawing with exactly `k` crossings.
#[derive(Debug, Clone)]
pub struct AssemblyBundle {
    pub k: usize,
    pub d: i64,
    pub copies: usize,
    pub gadget_style: GadgetStyle,
    pub gadget_t: usize,
    pub graph: Graph,
    pub components: Vec<BundleComponent>,
}

const NOTES: [&str; 3] = [
    "Each family component is the thick-edge-eliminated family graph itself. A k-crossing-critical subgraph containing its critical edges exists by the extraction lemma but is not computed here: deciding cr >= 171 exactly is out of reach.",
    "Certificates bound the crossing number from above only. The matching lower bound cr >= 171 for the family is not certified by this tool.",
    "Gadget vertices are unlabeled; family vertices keep their role labels, which repeat across copies.",
];

pub fn assemble(k: usize, d: i64, copies: Copies) -> Result<AssemblyBundle, AssembleError> {
    assemble_with(k, d, copies, GadgetStyle::K2t, FAMILY_GADGET_T)
}

/// [`assemble`] with a chosen gadget; the defaults are `K2t` and 172.
pub fn assemble_with(
    k: usize,
    d: i64,
    copies: Copies,
    style: GadgetStyle,
    gadget_t: usize,
) -> Result<AssemblyBundle, AssembleError> {
    if k < CANONICAL_CROSSINGS {
        return Err(AssembleError::KTooSmall(k));
    }
    let t = match copies {
        Copies::Auto => k / CANONICAL_CROSSINGS,
        Copies::Explicit(0) => return Err(AssembleError::NoCopies),
        Copies::Explicit(t) if t * CANONICAL_CROSSINGS > k => return Err(AssembleError::TooManyCopies { k, t }),
        Copies::Explicit(t) => t,
    };
    let inst = build_family(d)?;
    let lifted = lift_drawing(&canonical_drawing(&inst)?, gadget_t, style)?;

    let mut parts: Vec<(String, ComponentKind, DrawingCert)> = Vec::new();
    for i in 1..=t {
        parts.push((format!("family-{i}"), ComponentKind::Family, lifted.clone()));
    }
    let k5 = k5_one_crossing();
    for i in 1..=k - CANONICAL_CROSSINGS * t {
        parts.push((format!("k5-{i}"), ComponentKind::K5, k5.clone()));
    }

    let mut graph = Graph::new();
    let mut components = Vec::with_capacity(parts.len());
    for (name, kind, cert) in parts {
        let (g, shift) = disjoint_union(&graph, cert.base().graph());
        graph = g;
        components.push(BundleComponent { name, kind, cert, shift });
    }
    Ok(AssemblyBundle {
        k,
        d,
        copies: t,
        gadget_style: style,
        gadget_t,
        graph,
        components,
    })
}

impl AssemblyBundle {
    pub fn k5_copies(&self) -> usize {
        self.components.iter().filter(|c| c.kind == ComponentKind::K5).count()
    }

    pub fn certified_total(&self) -> usize {
        self.components.iter().map(|c| c.cert.crossing_count()).sum()
    }

    /// One drawing of the whole graph: the component drawings side by side,
    /// crossings numbered consecutively.
    pub fn combined_cert(&self) -> DrawingCert {
        let mut crossings = std::collections::BTreeMap::new();
        let mut orders = std::collections::BTreeMap::new();
        let mut next = 0u32;
        for c in &self.components {
            let base = c.cert.crossings().keys().map(|x| x.0).min().unwrap_or(0);
            let offset = next;
            let renamed = c.cert.rename_crossings(|x| CrossingId(x.0 - base + offset));
            let shifted = renamed.shifted(SpecialGraph::plain(Graph::new()), c.shift);
            for (&id, x) in shifted.crossings() {
                let (a, b) = x.edges();
                crossings.insert(id, Crossing::new(a, b).expect("distinct edges"));
                next = next.max(id.0 + 1);
            }
            orders.extend(shifted.orders().iter().map(|(&e, seq)| (e, seq.clone())));
        }
        DrawingCert::from_parts(SpecialGraph::plain(self.graph.clone()), crossings, orders)
    }

    /// Re-validates every component drawing.
    pub fn check(&self) -> Result<(), AssembleError> {
        for c in &self.components {
            if !validate(&c.cert).valid {
                return Err(AssembleError::Invalid(c.name.clone()));
            }
        }
        Ok(())
    }

    pub fn provenance(&self) -> Provenance {
        Provenance {
            k: self.k,
            d: self.d,
            copies: self.copies,
            k5_copies: self.k5_copies(),
            gadget_style: self.gadget_style,
            gadget_t: self.gadget_t,
            certified_total: self.certified_total(),
            components: self
                .components
                .iter()
                .map(|c| ComponentRecord {
                    name: c.name.clone(),
                    kind: c.kind,
                    cert: format!("certs/{}.json", c.name),
                    vertex_offset: c.shift.vertex,
                    edge_offset: c.shift.edge,
                    vertices: c.cert.base().graph().vertex_count(),
                    edges: c.cert.base().graph().edge_count(),
                    crossings: c.cert.crossing_count(),
                })
                .collect(),
            notes: NOTES.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// Writes `graph.json`, `certs/<component>.json`, `certs/combined.json`
    /// and `provenance.json` under `dir`. The output depends only on the
    /// bundle.
    pub fn write_dir(&self, dir: &Path) -> Result<(), AssembleError> {
        fs::create_dir_all(dir.join("certs"))?;
        fs::write(dir.join("graph.json"), encode_graph(&SpecialGraph::plain(self.graph.clone())))?;
        for c in &self.components {
            fs::write(dir.join("certs").join(format!("{}.json", c.name)), encode_cert(&c.cert))?;
        }
        fs::write(dir.join("certs/combined.json"), encode_cert(&self.combined_cert()))?;
        let prov = serde_json::to_string_pretty(&self.provenance())?;
        fs::write(dir.join("provenance.json"), prov + "\n")?;
        Ok(())
    }

    /// Reads a directory written by [`AssemblyBundle::write_dir`].
    pub fn read_dir(dir: &Path) -> Result<AssemblyBundle, AssembleError> {
        let prov: Provenance = serde_json::from_str(&fs::read_to_string(dir.join("provenance.json"))?)?;
        let graph = decode_graph(&fs::read_to_string(dir.join("graph.json"))?)?.into_parts().0;
        let mut components = Vec::with_capacity(prov.components.len());
        for r in &prov.components {
            let cert = decode_cert(&fs::read_to_string(dir.join(&r.cert))?)?;
            components.push(BundleComponent {
                name: r.name.clone(),
                kind: r.kind,
                cert,
                shift: IdShift {
                    vertex: r.vertex_offset,
                    edge: r.edge_offset,
                },
            });
        }
        Ok(AssemblyBundle {
            k: prov.k,
            d: prov.d,
            copies: prov.copies,
            gadget_style: prov.gadget_style,
            gadget_t: prov.gadget_t,
            graph,
            components,
        })
    }
}
