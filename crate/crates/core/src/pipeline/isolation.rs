//! Greedy maximal independent set: the first dominator layer.

use crate::error::PlutusError;
use crate::graph::{Graph, VertexSet};

use super::Role;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolationOutput {
    pub mis: VertexSet,
    /// Dominators in the order they were chosen.
    pub order: Vec<usize>,
    pub roles: Vec<Role>,
}

/// Runs the isolation phase on a connected graph.
///
/// Every node starts domination-prone. The highest-degree node becomes the
/// first dominator and its neighbors turn reluctant. Then, while a prone node
/// remains, the prone node with the most reluctant neighbors becomes a
/// dominator and its neighbors turn reluctant. Ties go to the lowest id.
pub fn isolation(g: &Graph) -> Result<IsolationOutput, PlutusError> {
    if g.node_count() == 0 {
        return Err(PlutusError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(PlutusError::DisconnectedInput);
    }
    let active = vec![true; g.node_count()];
    let component: Vec<usize> = g.nodes().collect();
    let mut roles = vec![Role::DominationProne; g.node_count()];
    let order = isolate_component(g, &active, &component, &mut roles);
    Ok(IsolationOutput {
        mis: order.iter().copied().collect(),
        order,
        roles,
    })
}

/// Isolation on each connected component of the subgraph induced by
/// `residual`, components taken in order of their smallest member.
pub(crate) fn isolate_components(g: &Graph, residual: &VertexSet) -> Vec<usize> {
    let active = g.mask(residual);
    let mut roles = vec![Role::DominationProne; g.node_count()];
    g.induced_components(residual)
        .iter()
        .flat_map(|component| isolate_component(g, &active, component, &mut roles))
        .collect()
}

/// Isolation restricted to one connected component of the active subgraph.
/// Returns the dominators in selection order and updates `roles` for the
/// component's nodes.
fn isolate_component(
    g: &Graph,
    active: &[bool],
    component: &[usize],
    roles: &mut [Role],
) -> Vec<usize> {
    let active_neighbors = |v: usize| g.neighbors(v).iter().copied().filter(|&w| active[w]);
    let mut reluctant_neighbors = vec![0usize; g.node_count()];
    let mut chosen = Vec::new();

    let promote = |v: usize, roles: &mut [Role], chosen: &mut Vec<usize>, counts: &mut [usize]| {
        roles[v] = Role::Dominator;
        chosen.push(v);
        for w in active_neighbors(v) {
            if roles[w] == Role::DominationProne {
                roles[w] = Role::DominationReluctant;
                for x in active_neighbors(w) {
                    counts[x] += 1;
                }
            }
        }
    };

    // Fallacy: the highest-degree node is the first dominator.
    let first = component
        .iter()
        .copied()
        .max_by_key(|&v| (active_neighbors(v).count(), std::cmp::Reverse(v)))
        .expect("components are non-empty");
    promote(first, roles, &mut chosen, &mut reluctant_neighbors);

    // Separation
    loop {
        let next = component
            .iter()
            .copied()
            .filter(|&v| roles[v] == Role::DominationProne)
            .max_by_key(|&v| (reluctant_neighbors[v], std::cmp::Reverse(v)));
        match next {
            Some(v) => promote(v, roles, &mut chosen, &mut reluctant_neighbors),
            None => break,
        }
    }
    chosen
}
