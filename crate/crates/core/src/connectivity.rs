//! Vertex connectivity of induced subgraphs.
//!
//! A vertex set is m-connected when it has at least m + 1 members and stays
//! connected after removing any m − 1 of them, so K_n is exactly
//! (n − 1)-connected. The one exception is m = 1, where a single vertex
//! counts as connected.

use crate::blocks::block_cut_tree;
use crate::graph::{Graph, VertexSet};

/// Why a vertex set fails to be m-connected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Separation {
    /// Fewer than m + 1 members (or no members at all).
    TooSmall,
    /// Removing these (at most m − 1) vertices disconnects the rest. Empty
    /// when the set is disconnected to begin with.
    Separator(Vec<usize>),
}

/// Exact m-connectivity test. Uses block decomposition after removing
/// m − 2 vertices, which is equivalent to trying every (m − 1)-subset.
pub fn is_m_connected(g: &Graph, subset: &VertexSet, m: u8) -> bool {
    separation(g, subset, m).is_none()
}

/// A witness that `subset` is not m-connected, if there is one.
pub fn separation(g: &Graph, subset: &VertexSet, m: u8) -> Option<Separation> {
    if subset.is_empty() {
        return Some(Separation::TooSmall);
    }
    if m <= 1 {
        return (!g.is_induced_connected(subset)).then(|| Separation::Separator(Vec::new()));
    }
    if subset.len() < m as usize + 1 {
        return Some(Separation::TooSmall);
    }
    match m {
        2 => cut_vertex(g, subset).map(|found| Separation::Separator(found.into_iter().collect())),
        3 => {
            if let Some(found) = cut_vertex(g, subset) {
                return Some(Separation::Separator(found.into_iter().collect()));
            }
            let mut rest = subset.clone();
            for &v in subset {
                rest.remove(&v);
                if let Some(found) = cut_vertex(g, &rest) {
                    let mut sep: Vec<usize> = found.into_iter().chain([v]).collect();
                    sep.sort_unstable();
                    return Some(Separation::Separator(sep));
                }
                rest.insert(v);
            }
            None
        }
        _ => exhaustive_separation(g, subset, m),
    }
}

/// `Some(None)` when disconnected, `Some(Some(c))` for the smallest cut
/// vertex, `None` when the set has no cut vertex.
fn cut_vertex(g: &Graph, subset: &VertexSet) -> Option<Option<usize>> {
    match block_cut_tree(g, subset) {
        Err(_) => Some(None),
        Ok(bct) => bct.cut_vertices.first().map(|&c| Some(c)),
    }
}

/// Reference test: removes every (m − 1)-subset and checks the remainder.
pub fn is_m_connected_exhaustive(g: &Graph, subset: &VertexSet, m: u8) -> bool {
    if subset.is_empty() {
        return false;
    }
    if m <= 1 {
        return g.is_induced_connected(subset);
    }
    subset.len() > m as usize && exhaustive_separation(g, subset, m).is_none()
}

fn exhaustive_separation(g: &Graph, subset: &VertexSet, m: u8) -> Option<Separation> {
    let members: Vec<usize> = subset.iter().copied().collect();
    let remove = m as usize - 1;
    let mut chosen: Vec<usize> = (0..remove).collect();
    loop {
        let removed: VertexSet = chosen.iter().map(|&i| members[i]).collect();
        let rest: VertexSet = subset.difference(&removed).copied().collect();
        if !g.is_induced_connected(&rest) {
            return Some(Separation::Separator(removed.into_iter().collect()));
        }
        // next combination in lexicographic order
        let pos = (0..remove)
            .rev()
            .find(|&i| chosen[i] < members.len() - remove + i)?;
        chosen[pos] += 1;
        for j in pos + 1..remove {
            chosen[j] = chosen[j - 1] + 1;
        }
    }
}
