//! Leaf-block augmentation: raising a backbone to 2- and 3-connectivity.

use crate::blocks::block_cut_tree;
use crate::connectivity::is_m_connected;
use crate::error::PlutusError;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentOutput {
    pub set: VertexSet,
    /// Newly promoted vertices in promotion order.
    pub added: Vec<usize>,
    pub iterations: usize,
}

/// Default iteration cap for both augmentation loops: ten per node.
pub fn default_iteration_cap(g: &Graph) -> usize {
    10 * g.node_count().max(1)
}

/// One augmentation step on `part`, a connected subset of `backbone` that is
/// not yet 2-connected. Returns the new vertices to promote, all outside
/// `backbone` and never `excluded`.
///
/// With a single vertex the lowest eligible neighbor joins. With two vertices
/// the shortest detour between them closes a cycle. Otherwise the leaf
/// block with the smallest member is tied back to the rest of `part` through
/// the shortest path that leaves from one of its non-cut vertices.
///
/// `Err` carries the vertices that could not be reconnected.
fn augment_step(
    g: &Graph,
    backbone: &[bool],
    part: &VertexSet,
    excluded: Option<usize>,
) -> Result<Vec<usize>, Vec<usize>> {
    let blocked = |x: usize| excluded == Some(x);
    let free = |x: usize| !backbone[x] && !blocked(x);
    let members: Vec<usize> = part.iter().copied().collect();

    match members[..] {
        [] => Err(Vec::new()),
        [only] => g
            .neighbors(only)
            .iter()
            .copied()
            .find(|&x| free(x))
            .map(|x| vec![x])
            .ok_or(members),
        [a, b] => {
            let starts: Vec<usize> = g
                .neighbors(a)
                .iter()
                .copied()
                .filter(|&x| free(x))
                .collect();
            g.route(&starts, |x| x == b, free, blocked)
                .map(|path| path[..path.len() - 1].to_vec())
                .ok_or(members)
        }
        _ => {
            let bct = block_cut_tree(g, part).map_err(|_| members.clone())?;
            let Some(&leaf_index) = bct.leaf_blocks.first() else {
                return Ok(Vec::new());
            };
            let leaf = &bct.blocks[leaf_index];
            let starts: Vec<usize> = leaf
                .iter()
                .copied()
                .filter(|v| !bct.cut_vertices.contains(v))
                .collect();
            let in_leaf = |x: usize| leaf.binary_search(&x).is_ok();
            g.route(&starts, |x| part.contains(&x) && !in_leaf(x), free, blocked)
                .map(|path| path[1..path.len() - 1].to_vec())
                .ok_or_else(|| leaf.clone())
        }
    }
}

fn promote(set: &mut VertexSet, mask: &mut [bool], added: &mut Vec<usize>, new: Vec<usize>) {
    for v in new {
        if set.insert(v) {
            mask[v] = true;
            added.push(v);
        }
    }
}

/// Grows a connected backbone until its induced subgraph is 2-connected.
pub fn diversification(
    g: &Graph,
    backbone: &VertexSet,
    cap: usize,
) -> Result<AugmentOutput, PlutusError> {
    if !g.is_induced_connected(backbone) {
        return Err(PlutusError::DisconnectedInput);
    }
    let mut set = backbone.clone();
    let mut mask = g.mask(&set);
    let mut added = Vec::new();
    let mut iterations = 0;
    while !is_m_connected(g, &set, 2) {
        if iterations == cap {
            return Err(PlutusError::IterationCapExceeded {
                phase: "diversification",
                cap,
            });
        }
        iterations += 1;
        let new = augment_step(g, &mask, &set, None)
            .map_err(|leaf_block| PlutusError::Infeasible2Connectivity { leaf_block })?;
        promote(&mut set, &mut mask, &mut added, new);
    }
    Ok(AugmentOutput {
        set,
        added,
        iterations,
    })
}

/// The smallest backbone vertex whose removal leaves a set that is not
/// 2-connected.
pub fn lowest_bad_point(g: &Graph, backbone: &VertexSet) -> Option<usize> {
    let mut rest = backbone.clone();
    backbone.iter().copied().find(|&v| {
        rest.remove(&v);
        let bad = !is_m_connected(g, &rest, 2);
        rest.insert(v);
        bad
    })
}

/// Grows a 2-connected backbone until no bad point remains, which makes it
/// 3-connected. Each step repairs the lowest bad point `v` by augmenting the
/// backbone without `v`, routing around `v`.
pub fn sustainability(
    g: &Graph,
    backbone: &VertexSet,
    cap: usize,
) -> Result<AugmentOutput, PlutusError> {
    if !is_m_connected(g, backbone, 2) {
        return Err(PlutusError::InvalidConfig(
            "sustainability needs a 2-connected backbone".into(),
        ));
    }
    let mut set = backbone.clone();
    let mut mask = g.mask(&set);
    let mut added = Vec::new();
    let mut iterations = 0;
    while let Some(bad_point) = lowest_bad_point(g, &set) {
        if iterations == cap {
            return Err(PlutusError::IterationCapExceeded {
                phase: "sustainability",
                cap,
            });
        }
        iterations += 1;
        let mut rest = set.clone();
        rest.remove(&bad_point);
        let new = augment_step(g, &mask, &rest, Some(bad_point))
            .map_err(|_| PlutusError::Infeasible3Connectivity { bad_point })?;
        if new.is_empty() {
            return Err(PlutusError::Infeasible3Connectivity { bad_point });
        }
        promote(&mut set, &mut mask, &mut added, new);
    }
    Ok(AugmentOutput {
        set,
        added,
        iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn wheel(rim: usize) -> Graph {
        let mut edges: Vec<_> = (1..=rim).map(|i| (0, i)).collect();
        edges.extend((1..=rim).map(|i| (i, i % rim + 1)));
        Graph::from_edge_list(rim + 1, &edges).unwrap()
    }

    #[test]
    fn c4_closes_the_cycle() {
        let out = diversification(&cycle(4), &[0, 1, 2].into(), 40).unwrap();
        assert_eq!(out.added, vec![3]);
        assert_eq!(out.set, (0..4).collect());
    }

    #[test]
    fn triangle_is_left_alone() {
        let out = diversification(&complete(3), &[0, 1, 2].into(), 30).unwrap();
        assert!(out.added.is_empty());
        assert_eq!(out.iterations, 0);
    }

    #[test]
    fn pair_gets_a_common_neighbor() {
        let out = diversification(&complete(4), &[0, 1].into(), 40).unwrap();
        assert_eq!(out.set, [0, 1, 2].into());
    }

    #[test]
    fn singleton_grows_into_a_triangle() {
        let out = diversification(&complete(4), &[0].into(), 40).unwrap();
        assert_eq!(out.added, vec![1, 2]);
    }

    #[test]
    fn pair_without_common_neighbor_uses_a_longer_detour() {
        let out = diversification(&cycle(5), &[0, 1].into(), 50).unwrap();
        assert_eq!(out.added, vec![4, 3, 2]);
    }

    #[test]
    fn tree_cannot_be_made_biconnected() {
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(
            diversification(&p4, &[1, 2].into(), 40),
            Err(PlutusError::Infeasible2Connectivity {
                leaf_block: vec![1, 2]
            })
        );
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            diversification(&cycle(4), &[0, 1, 2].into(), 0),
            Err(PlutusError::IterationCapExceeded {
                phase: "diversification",
                cap: 0
            })
        );
    }

    #[test]
    fn k4_triangle_takes_the_fourth_vertex() {
        let g = complete(4);
        assert_eq!(lowest_bad_point(&g, &[0, 1, 2].into()), Some(0));
        let out = sustainability(&g, &[0, 1, 2].into(), 40).unwrap();
        assert_eq!(out.added, vec![3]);
    }

    #[test]
    fn three_connected_backbones_are_unchanged() {
        let out = sustainability(&complete(5), &(0..5).collect(), 50).unwrap();
        assert!(out.added.is_empty());
        let w = wheel(5);
        assert_eq!(lowest_bad_point(&w, &(0..6).collect()), None);
    }

    #[test]
    fn sustainability_on_a_cycle_fails_with_a_bad_point() {
        let c5 = cycle(5);
        assert_eq!(
            sustainability(&c5, &(0..5).collect(), 50),
            Err(PlutusError::Infeasible3Connectivity { bad_point: 0 })
        );
    }

    #[test]
    fn sustainability_requires_two_connectivity() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            sustainability(&p3, &(0..3).collect(), 30),
            Err(PlutusError::InvalidConfig(_))
        ));
    }
}
