//! Connecting the independent dominators into a connected dominating set.

use crate::error::PlutusError;
use crate::graph::{Graph, VertexSet};

/// Pairs of independent dominators farther apart than this are never joined
/// directly; in a connected graph the nearer pairs already link every
/// maximal independent set.
pub const MAX_PAIR_DISTANCE: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationOutput {
    pub set: VertexSet,
    /// Connectors in promotion order.
    pub added: Vec<usize>,
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Promotes the interior of shortest paths between dominator pairs.
///
/// Pairs at hop distance at most [`MAX_PAIR_DISTANCE`] are visited in
/// ascending `(distance, smaller id, larger id)` order. A pair already joined
/// inside the current backbone is skipped; otherwise every interior vertex of
/// the lexicographically smallest shortest path joins the backbone.
pub fn domination(g: &Graph, mis: &VertexSet) -> Result<DominationOutput, PlutusError> {
    if g.node_count() == 0 || mis.is_empty() {
        return Err(PlutusError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(PlutusError::DisconnectedInput);
    }

    let mut pairs = Vec::new();
    for &a in mis {
        let dist = g.bfs_within(a, None, MAX_PAIR_DISTANCE);
        pairs.extend(
            mis.range(a + 1..)
                .filter_map(|&b| dist[b].map(|d| (d, a, b))),
        );
    }
    pairs.sort_unstable();

    let mut in_set = g.mask(mis);
    let mut joined = DisjointSets::new(g.node_count());
    let mut set = mis.clone();
    let mut added = Vec::new();
    let admit = |v: usize, in_set: &mut [bool], joined: &mut DisjointSets| {
        in_set[v] = true;
        for &w in g.neighbors(v) {
            if in_set[w] {
                joined.union(v, w);
            }
        }
    };
    for &v in mis {
        admit(v, &mut in_set, &mut joined);
    }

    for (_, a, b) in pairs {
        if joined.find(a) == joined.find(b) {
            continue;
        }
        let path = g
            .shortest_path(a, b, &VertexSet::new(), |_| true)
            .expect("pair lies within hop range");
        for &v in &path[1..path.len() - 1] {
            if !in_set[v] {
                admit(v, &mut in_set, &mut joined);
                set.insert(v);
                added.push(v);
            }
        }
    }

    let components = g.induced_components(&set);
    if components.len() > 1 {
        return Err(PlutusError::BackboneDisconnected {
            component: components[1].iter().copied().collect(),
        });
    }
    Ok(DominationOutput { set, added })
}
