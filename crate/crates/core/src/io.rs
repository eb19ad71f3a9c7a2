//! JSON formats for graphs and pipeline results.
//!
//! Graph documents carry either an explicit edge list or a point set with a
//! radius, never both:
//!
//! ```json
//! {"n": 3, "edges": [[0, 1], [1, 2]]}
//! {"n": 2, "points": [[0.0, 0.0], [1.0, 0.0]], "radius": 1.0}
//! ```
//!
//! Result documents follow
//! `{"D": [...], "k": 1, "m": 1, "phases": [{"name", "size", "added"}], "roles": {"0": "dominator", ...}}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::FormatError;
use crate::graph::Graph;
use crate::pipeline::{Phase, PhaseRecord, PlutusResult, Role};
use crate::udg::{from_points, UdgInstance};

/// Upper bound on `n` accepted from untrusted documents.
pub const MAX_DOCUMENT_NODES: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    edges: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    points: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    radius: Option<f64>,
}

/// A parsed graph document, keeping the geometry when there was one.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphInput {
    pub graph: Graph,
    pub geometry: Option<UdgInstance>,
}

pub fn parse_graph_json(bytes: &[u8]) -> Result<GraphInput, FormatError> {
    let doc: GraphDoc = serde_json::from_slice(bytes)?;
    if doc.n > MAX_DOCUMENT_NODES {
        return Err(FormatError::TooManyNodes {
            n: doc.n,
            limit: MAX_DOCUMENT_NODES,
        });
    }
    match (doc.points, doc.radius) {
        (Some(points), Some(radius)) => {
            if doc.edges.is_some() {
                return Err(FormatError::EdgesWithPoints);
            }
            if points.len() != doc.n {
                return Err(FormatError::PointCountMismatch {
                    n: doc.n,
                    points: points.len(),
                });
            }
            let points: Vec<(f64, f64)> = points.into_iter().map(|[x, y]| (x, y)).collect();
            let graph = from_points(&points, radius)?;
            Ok(GraphInput {
                graph,
                geometry: Some(UdgInstance { points, radius }),
            })
        }
        (None, None) => {
            let edges: Vec<(usize, usize)> = doc
                .edges
                .unwrap_or_default()
                .into_iter()
                .map(|[u, v]| (u, v))
                .collect();
            Ok(GraphInput {
                graph: Graph::from_edge_list(doc.n, &edges)?,
                geometry: None,
            })
        }
        _ => Err(FormatError::IncompleteGeometry),
    }
}

pub fn graph_to_json(g: &Graph) -> String {
    let doc = GraphDoc {
        n: g.node_count(),
        edges: Some(g.edges().map(|(u, v)| [u, v]).collect()),
        points: None,
        radius: None,
    };
    serde_json::to_string(&doc).expect("graph documents serialize")
}

pub fn instance_to_json(inst: &UdgInstance) -> String {
    let doc = GraphDoc {
        n: inst.points.len(),
        edges: None,
        points: Some(inst.points.iter().map(|&(x, y)| [x, y]).collect()),
        radius: Some(inst.radius),
    };
    serde_json::to_string(&doc).expect("instance documents serialize")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PhaseDoc {
    name: String,
    size: usize,
    added: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ResultDoc {
    #[serde(rename = "D")]
    dominating_set: Vec<usize>,
    k: usize,
    m: u64,
    phases: Vec<PhaseDoc>,
    roles: BTreeMap<usize, String>,
}

pub fn result_to_json(result: &PlutusResult) -> String {
    let doc = ResultDoc {
        dominating_set: result.dominating_set.iter().copied().collect(),
        k: result.k,
        m: result.m as u64,
        phases: result
            .phase_trace
            .iter()
            .map(|r| PhaseDoc {
                name: r.phase.as_str().into(),
                size: r.size,
                added: r.added.clone(),
            })
            .collect(),
        roles: result
            .roles
            .iter()
            .enumerate()
            .map(|(v, r)| (v, r.as_str().into()))
            .collect(),
    };
    serde_json::to_string(&doc).expect("result documents serialize")
}

/// Parses a result document. Role keys must cover `0..n` exactly, but the
/// backbone is not checked against the roles, so tampered results still load
/// and can be verified.
pub fn parse_result_json(bytes: &[u8]) -> Result<PlutusResult, FormatError> {
    let doc: ResultDoc = serde_json::from_slice(bytes)?;
    let m = match doc.m {
        1..=3 => doc.m as u8,
        other => return Err(FormatError::InvalidM(other)),
    };
    let mut roles = Vec::with_capacity(doc.roles.len());
    for (expected, (id, name)) in doc.roles.into_iter().enumerate() {
        if id != expected {
            return Err(FormatError::BadRoleKey(id.to_string()));
        }
        roles.push(Role::parse(&name).ok_or(FormatError::UnknownRole(name))?);
    }
    let phase_trace = doc
        .phases
        .into_iter()
        .map(|p| {
            let phase =
                Phase::parse(&p.name).ok_or_else(|| FormatError::UnknownPhase(p.name.clone()))?;
            Ok(PhaseRecord {
                phase,
                size: p.size,
                added: p.added,
            })
        })
        .collect::<Result<_, FormatError>>()?;
    Ok(PlutusResult {
        k: doc.k,
        m,
        dominating_set: doc.dominating_set.into_iter().collect(),
        phase_trace,
        roles,
    })
}
