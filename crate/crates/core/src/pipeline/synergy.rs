//! Layered independent sets for k-fold domination.

use crate::error::PlutusError;
use crate::graph::{Graph, VertexSet};

use super::isolation::isolate_components;

/// What to do when a node outside the backbone ends up with fewer than k
/// dominator neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SynergyMode {
    /// Promote the deficient node itself into the backbone.
    #[default]
    BestEffort,
    /// Fail with the deficient node as witness.
    Strict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynergyOutput {
    pub set: VertexSet,
    /// `layers[0]` is the isolation output; `layers[i]` is the independent
    /// set chosen from what the earlier layers left behind.
    pub layers: Vec<VertexSet>,
    /// Newly promoted vertices in promotion order.
    pub added: Vec<usize>,
}

/// Adds layers 2..=k of independent dominators to a connected dominating
/// set. Layer i is isolation run per component on the nodes not covered by
/// layers 1..i. Stops early once no node is left.
pub fn synergy(
    g: &Graph,
    backbone: &VertexSet,
    first_layer: &VertexSet,
    k: usize,
    mode: SynergyMode,
) -> Result<SynergyOutput, PlutusError> {
    if k == 0 {
        return Err(PlutusError::InvalidConfig("k must be positive".into()));
    }
    let mut set = backbone.clone();
    let mut added = Vec::new();
    let mut layers = vec![first_layer.clone()];
    let mut residual: VertexSet = g.nodes().filter(|v| !first_layer.contains(v)).collect();

    for _ in 2..=k {
        if residual.is_empty() {
            break;
        }
        let layer = isolate_components(g, &residual);
        for &v in &layer {
            residual.remove(&v);
            if set.insert(v) {
                added.push(v);
            }
        }
        layers.push(layer.into_iter().collect());
    }

    for v in enforce_k_dominance(g, &set, k, mode)? {
        set.insert(v);
        added.push(v);
    }
    Ok(SynergyOutput { set, layers, added })
}

/// Checks every node outside `set` for at least `k` neighbors in `set`.
/// In best-effort mode returns the deficient nodes (ascending) to promote;
/// in strict mode fails on the first one.
pub fn enforce_k_dominance(
    g: &Graph,
    set: &VertexSet,
    k: usize,
    mode: SynergyMode,
) -> Result<Vec<usize>, PlutusError> {
    let inside = g.mask(set);
    let mut deficient = Vec::new();
    for v in g.nodes().filter(|&v| !inside[v]) {
        let dominators = g.neighbors(v).iter().filter(|&&w| inside[w]).count();
        if dominators < k {
            if mode == SynergyMode::Strict {
                return Err(PlutusError::InfeasibleKDominance {
                    node: v,
                    dominators,
                    k,
                });
            }
            deficient.push(v);
        }
    }
    Ok(deficient)
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

    #[test]
    fn k_one_changes_nothing() {
        let g = cycle(6);
        let d: VertexSet = [0, 1, 2, 4, 5].into();
        let out = synergy(&g, &d, &[0, 2, 4].into(), 1, SynergyMode::Strict).unwrap();
        assert_eq!(out.set, d);
        assert_eq!(out.layers.len(), 1);
    }

    #[test]
    fn k5_second_layer() {
        let out = synergy(
            &complete(5),
            &[0].into(),
            &[0].into(),
            2,
            SynergyMode::Strict,
        )
        .unwrap();
        assert_eq!(out.layers, vec![[0].into(), [1].into()]);
        assert_eq!(out.set, [0, 1].into());
    }

    #[test]
    fn hexagon_second_layer_takes_the_rest() {
        let out = synergy(
            &cycle(6),
            &[0, 1, 2, 3, 4].into(),
            &[0, 2, 4].into(),
            2,
            SynergyMode::Strict,
        )
        .unwrap();
        assert_eq!(out.layers[1], [1, 3, 5].into());
        assert_eq!(out.set, (0..6).collect());
    }

    #[test]
    fn stops_when_residual_is_empty() {
        let out = synergy(
            &cycle(6),
            &[0, 1, 2, 4, 5].into(),
            &[0, 2, 4].into(),
            5,
            SynergyMode::Strict,
        )
        .unwrap();
        assert_eq!(out.layers.len(), 2);
    }

    #[test]
    fn deficits_are_reported_or_promoted() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let d: VertexSet = [1].into();
        assert_eq!(
            enforce_k_dominance(&p3, &d, 2, SynergyMode::Strict),
            Err(PlutusError::InfeasibleKDominance {
                node: 0,
                dominators: 1,
                k: 2
            })
        );
        assert_eq!(
            enforce_k_dominance(&p3, &d, 2, SynergyMode::BestEffort),
            Ok(vec![0, 2])
        );
        assert_eq!(
            enforce_k_dominance(&p3, &d, 1, SynergyMode::Strict),
            Ok(vec![])
        );
    }

    #[test]
    fn layers_absorb_low_degree_nodes() {
        // P3 with k = 3: layers {1}, {0, 2}; nothing left outside.
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let out = synergy(&p3, &[1].into(), &[1].into(), 3, SynergyMode::Strict).unwrap();
        assert_eq!(out.set, [0, 1, 2].into());
    }
}
