use thiserror::Error;

use crate::graph::VertexSet;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("self-loop on node {0}")]
    SelfLoop(usize),
    #[error("node id {id} out of range for {n} nodes")]
    NodeOutOfRange { id: usize, n: usize },
    #[error("coordinate of point {0} is not finite")]
    NonFiniteCoordinate(usize),
    #[error("radius must be a positive finite number, got {0}")]
    InvalidRadius(f64),
    #[error("graph has no nodes")]
    EmptyGraph,
    #[error("induced subgraph is disconnected")]
    DisconnectedInput,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PlutusError {
    #[error("graph has no nodes")]
    EmptyGraph,
    #[error("input graph is disconnected")]
    DisconnectedInput,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("graph is not {m}-connected, so no {m}-connected backbone exists")]
    GraphNotMConnected { m: u8 },
    #[error("node {node} has only {dominators} dominator neighbors, {k} required")]
    InfeasibleKDominance {
        node: usize,
        dominators: usize,
        k: usize,
    },
    #[error("no augmenting path leaves the leaf block {leaf_block:?}")]
    Infeasible2Connectivity { leaf_block: Vec<usize> },
    #[error("bad point {bad_point} cannot be repaired")]
    Infeasible3Connectivity { bad_point: usize },
    #[error("{phase} exceeded the iteration cap of {cap}")]
    IterationCapExceeded { phase: &'static str, cap: usize },
    #[error("domination left the backbone disconnected")]
    BackboneDisconnected { component: VertexSet },
}

impl From<GraphError> for PlutusError {
    fn from(err: GraphError) -> Self {
        match err {
            GraphError::EmptyGraph => PlutusError::EmptyGraph,
            GraphError::DisconnectedInput => PlutusError::DisconnectedInput,
            other => PlutusError::InvalidConfig(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("exhaustive search is limited to {limit} nodes, got {n}")]
    TooLarge { n: usize, limit: usize },
    #[error("m must be 1, 2 or 3, got {0}")]
    InvalidM(u8),
    #[error("k must be positive")]
    InvalidK,
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("`edges` must be absent when `points` and `radius` are given")]
    EdgesWithPoints,
    #[error("`points` and `radius` must be given together")]
    IncompleteGeometry,
    #[error("`n` is {n} but {points} points were given")]
    PointCountMismatch { n: usize, points: usize },
    #[error("m must be 1, 2 or 3, got {0}")]
    InvalidM(u64),
    #[error("document declares {n} nodes, the limit is {limit}")]
    TooManyNodes { n: usize, limit: usize },
    #[error("unknown phase {0:?}")]
    UnknownPhase(String),
    #[error("unknown role {0:?}")]
    UnknownRole(String),
    #[error("role key {0:?} is not a node id")]
    BadRoleKey(String),
    #[error("result refers to node {id} but the graph has {n} nodes")]
    NodeOutOfRange { id: usize, n: usize },
}
