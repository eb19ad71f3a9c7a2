//! Independent checkers for backbone properties.
//!
//! Every failed check carries a witness that can be replayed against the
//! graph with [`replay`] to reproduce the violation. In JSON a witness is a
//! flat list of integers whose meaning depends on the check:
//!
//! | check          | witness                                                   |
//! |----------------|-----------------------------------------------------------|
//! | `independent`  | `[u, v]`, two adjacent members                            |
//! | `maximal`      | `[v]`, a non-member with no member neighbor               |
//! | `k_dominating` | `[v, count]`, a non-member with too few member neighbors  |
//! | `connected`    | members unreachable from the smallest member              |
//! | `m_connected`  | at most m − 1 members whose removal disconnects the rest, |
//! |                | or every member when the set has at most m members        |

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::connectivity::{separation, Separation};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckName {
    Independent,
    Maximal,
    KDominating,
    Connected,
    MConnected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    AdjacentPair(usize, usize),
    Addable(usize),
    Undominated { node: usize, dominators: usize },
    Unreachable(Vec<usize>),
    Separator(Vec<usize>),
    TooSmall(Vec<usize>),
}

impl Witness {
    pub fn to_vertices(&self) -> Vec<usize> {
        match self {
            Witness::AdjacentPair(u, v) => vec![*u, *v],
            Witness::Addable(v) => vec![*v],
            Witness::Undominated { node, dominators } => vec![*node, *dominators],
            Witness::Unreachable(set) | Witness::Separator(set) | Witness::TooSmall(set) => {
                set.clone()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: CheckName,
    pub pass: bool,
    pub witness: Option<Vec<usize>>,
}

impl Check {
    fn from_verdict(name: CheckName, verdict: Result<(), Witness>) -> Self {
        let witness = verdict.as_ref().err().map(Witness::to_vertices);
        Check {
            name,
            pass: verdict.is_ok(),
            witness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StretchSummary {
    pub max: f64,
    pub pair: Option<(usize, usize)>,
    /// Pairs connected in the graph but not through the backbone.
    pub unreachable_pairs: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub overall: bool,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stretch: Option<StretchSummary>,
}

impl VerificationReport {
    pub fn new(checks: Vec<Check>) -> Self {
        VerificationReport {
            overall: checks.iter().all(|c| c.pass),
            checks,
            stretch: None,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

fn count_inside(g: &Graph, v: usize, inside: &[bool]) -> usize {
    g.neighbors(v).iter().filter(|&&w| inside[w]).count()
}

pub fn check_independent(g: &Graph, s: &VertexSet) -> Result<(), Witness> {
    let inside = g.mask(s);
    for &u in s {
        if let Some(&v) = g.neighbors(u).iter().find(|&&v| v > u && inside[v]) {
            return Err(Witness::AdjacentPair(u, v));
        }
    }
    Ok(())
}

/// Independent, and no outside vertex can join without breaking that.
pub fn is_maximal_independent_set(g: &Graph, s: &VertexSet) -> Result<(), Witness> {
    check_independent(g, s)?;
    let inside = g.mask(s);
    match g
        .nodes()
        .find(|&v| !inside[v] && count_inside(g, v, &inside) == 0)
    {
        Some(v) => Err(Witness::Addable(v)),
        None => Ok(()),
    }
}

/// Every vertex outside `s` has at least `k` neighbors in `s`.
pub fn is_k_dominating(g: &Graph, s: &VertexSet, k: usize) -> Result<(), Witness> {
    let inside = g.mask(s);
    for v in g.nodes().filter(|&v| !inside[v]) {
        let dominators = count_inside(g, v, &inside);
        if dominators < k {
            return Err(Witness::Undominated {
                node: v,
                dominators,
            });
        }
    }
    Ok(())
}

pub fn check_connected(g: &Graph, s: &VertexSet) -> Result<(), Witness> {
    let Some(&start) = s.first() else {
        return Err(Witness::TooSmall(Vec::new()));
    };
    let mask = g.mask(s);
    let dist = g.bfs_within(start, Some(&mask), usize::MAX);
    let unreachable: Vec<usize> = s.iter().copied().filter(|&v| dist[v].is_none()).collect();
    if unreachable.is_empty() {
        Ok(())
    } else {
        Err(Witness::Unreachable(unreachable))
    }
}

pub fn is_connected_dominating_set(g: &Graph, s: &VertexSet) -> Result<(), Witness> {
    is_k_dominating(g, s, 1)?;
    check_connected(g, s)
}

pub fn check_m_connected(g: &Graph, s: &VertexSet, m: u8) -> Result<(), Witness> {
    match separation(g, s, m) {
        None => Ok(()),
        Some(Separation::TooSmall) => Err(Witness::TooSmall(s.iter().copied().collect())),
        Some(Separation::Separator(sep)) => Err(Witness::Separator(sep)),
    }
}

/// The full certificate for an m-connected k-dominating backbone.
pub fn is_m_connected_k_dominating(
    g: &Graph,
    s: &VertexSet,
    k: usize,
    m: u8,
) -> VerificationReport {
    let mut checks = vec![
        Check::from_verdict(CheckName::KDominating, is_k_dominating(g, s, k)),
        Check::from_verdict(CheckName::Connected, check_connected(g, s)),
    ];
    if m >= 2 {
        checks.push(Check::from_verdict(
            CheckName::MConnected,
            check_m_connected(g, s, m),
        ));
    }
    VerificationReport::new(checks)
}

/// Re-derives a failed check from its witness alone. Returns `true` when the
/// witness demonstrates the violation it claims.
pub fn replay(g: &Graph, s: &VertexSet, k: usize, m: u8, check: &Check) -> bool {
    let Some(w) = check.witness.as_deref() else {
        return false;
    };
    let n = g.node_count();
    if w.iter().any(|&v| v >= n) && check.name != CheckName::KDominating {
        return false;
    }
    let inside = g.mask(s);
    match (check.name, w) {
        (CheckName::Independent, &[u, v]) => inside[u] && inside[v] && g.has_edge(u, v),
        (CheckName::Maximal, &[v]) => !inside[v] && count_inside(g, v, &inside) == 0,
        (CheckName::KDominating, &[v, count]) => {
            v < n && !inside[v] && count_inside(g, v, &inside) == count && count < k
        }
        (CheckName::Connected, part) => {
            // A non-empty proper part of `s` with no edge to the rest of `s`.
            let part_set: VertexSet = part.iter().copied().collect();
            !part_set.is_empty()
                && part_set.len() < s.len()
                && part_set.is_subset(s)
                && part_set.iter().all(|&u| {
                    g.neighbors(u)
                        .iter()
                        .all(|&v| !inside[v] || part_set.contains(&v))
                })
        }
        (CheckName::MConnected, removed) => {
            let removed: VertexSet = removed.iter().copied().collect();
            if !removed.is_subset(s) {
                return false;
            }
            if removed == *s && s.len() <= m as usize {
                return true;
            }
            let rest: VertexSet = s.difference(&removed).copied().collect();
            removed.len() < m as usize && !rest.is_empty() && !g.is_induced_connected(&rest)
        }
        _ => false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceReport {
    pub pair: (usize, usize),
    pub d_graph: usize,
    /// `None` when no path runs through the backbone.
    pub d_backbone: Option<usize>,
}

impl DistanceReport {
    pub fn stretch(&self) -> Option<f64> {
        self.d_backbone.map(|d| d as f64 / self.d_graph as f64)
    }
}

/// Hop distances from `source` along paths whose interior lies in `inside`.
fn backbone_distances(g: &Graph, source: usize, inside: &[bool]) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.node_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(x) = queue.pop_front() {
        if x != source && !inside[x] {
            continue;
        }
        let dx = dist[x].unwrap();
        for &y in g.neighbors(x) {
            if dist[y].is_none() {
                dist[y] = Some(dx + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

pub fn backbone_distance(g: &Graph, s: &VertexSet, u: usize, v: usize) -> Option<DistanceReport> {
    let d_graph = g.hop_distance(u, v)?;
    let d_backbone = backbone_distances(g, u, &g.mask(s))[v];
    Some(DistanceReport {
        pair: (u, v),
        d_graph,
        d_backbone,
    })
}

/// Largest ratio of backbone-routed to true hop distance over all connected
/// pairs. A graph with no pairs reports 1.0.
pub fn backbone_stretch(g: &Graph, s: &VertexSet) -> StretchSummary {
    let inside = g.mask(s);
    let mut summary = StretchSummary {
        max: 1.0,
        pair: None,
        unreachable_pairs: 0,
    };
    let mut best: Option<(usize, usize)> = None;
    for u in g.nodes() {
        let direct = g.bfs_distances(u);
        let routed = backbone_distances(g, u, &inside);
        for v in u + 1..g.node_count() {
            let Some(d) = direct[v] else { continue };
            let Some(r) = routed[v] else {
                summary.unreachable_pairs += 1;
                continue;
            };
            // compare r/d against the best ratio without rounding
            let better = match best {
                None => true,
                Some((br, bd)) => r * bd > br * d,
            };
            if better {
                best = Some((r, d));
                summary.max = r as f64 / d as f64;
                summary.pair = Some((u, v));
            }
        }
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edge_list(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn maximal_independent_sets() {
        assert_eq!(is_maximal_independent_set(&path(3), &[1].into()), Ok(()));
        assert_eq!(
            is_maximal_independent_set(&path(3), &[0].into()),
            Err(Witness::Addable(2))
        );
        assert_eq!(
            is_maximal_independent_set(&cycle(6), &[0, 2, 4].into()),
            Ok(())
        );
        assert_eq!(
            is_maximal_independent_set(&path(3), &[0, 1].into()),
            Err(Witness::AdjacentPair(0, 1))
        );
    }

    #[test]
    fn connected_dominating_sets() {
        assert_eq!(
            is_connected_dominating_set(&path(5), &[1, 2, 3].into()),
            Ok(())
        );
        assert_eq!(
            is_connected_dominating_set(&path(5), &[1, 3].into()),
            Err(Witness::Unreachable(vec![3]))
        );
        assert_eq!(
            is_connected_dominating_set(&complete(4), &[0].into()),
            Ok(())
        );
    }

    #[test]
    fn k_domination() {
        assert_eq!(is_k_dominating(&complete(5), &[0, 1].into(), 2), Ok(()));
        assert_eq!(
            is_k_dominating(&path(3), &[1].into(), 2),
            Err(Witness::Undominated {
                node: 0,
                dominators: 1
            })
        );
        assert_eq!(is_k_dominating(&path(4), &(0..4).collect(), 7), Ok(()));
    }

    #[test]
    fn full_certificates() {
        let c4 = cycle(4);
        assert!(is_m_connected_k_dominating(&c4, &(0..4).collect(), 1, 2).overall);

        let report = is_m_connected_k_dominating(&path(5), &[1, 2, 3].into(), 1, 2);
        assert!(!report.overall);
        let failed: Vec<_> = report.failures().collect();
        assert_eq!(failed.len(), 1);
        assert_eq!(failed[0].name, CheckName::MConnected);
        assert_eq!(failed[0].witness, Some(vec![2]));

        assert!(is_m_connected_k_dominating(&complete(4), &(0..4).collect(), 2, 3).overall);
    }

    #[test]
    fn witnesses_replay() {
        let g = path(5);
        let s: VertexSet = [1, 3].into();
        for check in is_m_connected_k_dominating(&g, &s, 2, 2).failures() {
            assert!(replay(&g, &s, 2, 2, check), "{check:?}");
        }
        let small: VertexSet = [1, 2].into();
        let report = is_m_connected_k_dominating(&g, &small, 1, 2);
        let m_check = report
            .checks
            .iter()
            .find(|c| c.name == CheckName::MConnected)
            .unwrap();
        assert_eq!(m_check.witness, Some(vec![1, 2]));
        assert!(replay(&g, &small, 1, 2, m_check));
    }

    #[test]
    fn forged_witnesses_do_not_replay() {
        let g = path(5);
        let s: VertexSet = [1, 2, 3].into();
        let forged = Check {
            name: CheckName::MConnected,
            pass: false,
            witness: Some(vec![1]),
        };
        assert!(!replay(&g, &s, 1, 2, &forged));
        let forged = Check {
            name: CheckName::KDominating,
            pass: false,
            witness: Some(vec![0, 0]),
        };
        assert!(!replay(&g, &s, 1, 2, &forged));
        let forged = Check {
            name: CheckName::Connected,
            pass: false,
            witness: Some(vec![1, 2, 3]),
        };
        assert!(!replay(&g, &s, 1, 2, &forged));
    }

    #[test]
    fn stretch_examples() {
        let summary = backbone_stretch(&complete(4), &[0].into());
        assert_eq!(summary.max, 1.0);
        assert_eq!(backbone_stretch(&path(5), &[1, 2, 3].into()).max, 1.0);
        assert_eq!(backbone_stretch(&star(4), &[0].into()).max, 1.0);
        let report = backbone_distance(&star(4), &[0].into(), 1, 2).unwrap();
        assert_eq!((report.d_graph, report.d_backbone), (2, Some(2)));
    }

    #[test]
    fn stretch_detects_detours() {
        // C6 with backbone {0,1,2,3}: 0 and 4 are two hops apart via 5, but
        // the backbone route is 4-3-2-1-0.
        let s = backbone_stretch(&cycle(6), &[0, 1, 2, 3].into());
        assert_eq!(s.max, 2.0);
        assert_eq!(s.pair, Some((0, 4)));
        // P4 with backbone {0,1}: nothing reaches 3 through the backbone.
        let s = backbone_stretch(&path(4), &[0, 1].into());
        assert_eq!(s.unreachable_pairs, 2);
    }
}
