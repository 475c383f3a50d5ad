//! Certificate JSON:
//! `{"graph": <graph JSON>, "crossings":[{"id":0,"e1":3,"e2":7}], "orders":{"3":[0]}}`.
//!
//! Decoding rejects documents that do not describe a certificate at all
//! (unknown edge or crossing ids, an edge crossing itself, bad keys).
//! Everything else, such as thick edges being crossed or a crossing missing
//! from one of its edges, decodes fine and is left for `validate` to report.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Crossing, CrossingId, DrawingCert};
use crate::graph::json::{GraphJson, SchemaError};
use crate::graph::EdgeId;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossingJson {
    pub id: u32,
    pub e1: u32,
    pub e2: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertJson {
    pub graph: GraphJson,
    #[serde(default)]
    pub crossings: Vec<CrossingJson>,
    #[serde(default)]
    pub orders: BTreeMap<String, Vec<u32>>,
}

impl CertJson {
    pub fn from_cert(cert: &DrawingCert) -> Self {
        CertJson {
            graph: GraphJson::from_special(cert.base()),
            crossings: cert
                .crossings()
                .iter()
                .map(|(c, x)| {
                    let (a, b) = x.edges();
                    CrossingJson {
                        id: c.0,
                        e1: a.0,
                        e2: b.0,
                    }
                })
                .collect(),
            orders: cert
                .orders()
                .iter()
                .filter(|(_, seq)| !seq.is_empty())
                .map(|(e, seq)| (e.0.to_string(), seq.iter().map(|c| c.0).collect()))
                .collect(),
        }
    }

    pub fn to_cert(&self) -> Result<DrawingCert, SchemaError> {
        let base = self.graph.to_special("graph.")?;
        let g = base.graph();
        let mut crossings = BTreeMap::new();
        for (i, cj) in self.crossings.iter().enumerate() {
            let path = format!("crossings[{i}]");
            for e in [cj.e1, cj.e2] {
                if !g.contains_edge(EdgeId(e)) {
                    return Err(SchemaError::invalid(path, format!("unknown edge e{e}")));
                }
            }
            let x = Crossing::new(EdgeId(cj.e1), EdgeId(cj.e2))
                .ok_or_else(|| SchemaError::invalid(&path, format!("edge e{} crosses itself", cj.e1)))?;
            if crossings.insert(CrossingId(cj.id), x).is_some() {
                return Err(SchemaError::invalid(path, format!("duplicate crossing id x{}", cj.id)));
            }
        }
        let mut orders = BTreeMap::new();
        for (key, seq) in &self.orders {
            let path = format!("orders[\"{key}\"]");
            let e: u32 = key
                .parse()
                .map_err(|_| SchemaError::invalid(&path, "key is not an edge id"))?;
            if !g.contains_edge(EdgeId(e)) {
                return Err(SchemaError::invalid(path, format!("unknown edge e{e}")));
            }
            for (j, &c) in seq.iter().enumerate() {
                if !crossings.contains_key(&CrossingId(c)) {
                    return Err(SchemaError::invalid(format!("{path}[{j}]"), format!("unknown crossing x{c}")));
                }
            }
            orders.insert(EdgeId(e), seq.iter().map(|&c| CrossingId(c)).collect());
        }
        Ok(DrawingCert::from_parts(base, crossings, orders))
    }
}

pub fn encode_cert(cert: &DrawingCert) -> String {
    serde_json::to_string_pretty(&CertJson::from_cert(cert)).expect("cert JSON serializes")
}

pub fn decode_cert(text: &str) -> Result<DrawingCert, SchemaError> {
    let raw: CertJson = serde_json::from_str(text)?;
    raw.to_cert()
}
