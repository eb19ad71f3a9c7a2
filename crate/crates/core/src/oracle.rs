//! Exhaustive search for a minimum m-connected k-dominating set.
//!
//! Subsets are visited by ascending size, lexicographically within a size,
//! so the first valid subset is a global minimum. All checks run on `u32`
//! bitmasks and share no code with the pipeline or the block-based
//! connectivity test.

use serde::Serialize;

use crate::error::OracleError;
use crate::graph::{Graph, VertexSet};

pub const MAX_ORACLE_NODES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    /// `None` when no subset up to the size cap qualifies.
    pub optimum_size: Option<usize>,
    pub optimum_witness: Option<VertexSet>,
    pub sets_examined: u64,
}

struct Masks {
    n: usize,
    neighbors: Vec<u32>,
}

impl Masks {
    fn new(g: &Graph) -> Self {
        let neighbors = g
            .nodes()
            .map(|u| g.neighbors(u).iter().fold(0u32, |acc, &v| acc | 1 << v))
            .collect();
        Masks {
            n: g.node_count(),
            neighbors,
        }
    }

    fn k_dominating(&self, set: u32, k: usize) -> bool {
        (0..self.n)
            .filter(|&v| set & (1 << v) == 0)
            .all(|v| (self.neighbors[v] & set).count_ones() as usize >= k)
    }

    fn connected(&self, set: u32) -> bool {
        if set == 0 {
            return false;
        }
        let mut reached = 1u32 << set.trailing_zeros();
        loop {
            let mut grown = reached;
            let mut frontier = reached;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                grown |= self.neighbors[v] & set;
            }
            if grown == reached {
                return reached == set;
            }
            reached = grown;
        }
    }

    /// Every way of deleting m − 1 members leaves a connected remainder.
    fn m_connected(&self, set: u32, m: u8) -> bool {
        let size = set.count_ones() as usize;
        if m <= 1 {
            return self.connected(set);
        }
        if size < m as usize + 1 {
            return false;
        }
        let members: Vec<u32> = (0..self.n as u32)
            .filter(|&v| set & (1 << v) != 0)
            .collect();
        let all_connected =
            subsets_of_size(&members, m as usize - 1).all(|removed| self.connected(set & !removed));
        all_connected
    }
}

/// All `size`-element sub-masks of `members`, lexicographic by member index.
fn subsets_of_size(members: &[u32], size: usize) -> impl Iterator<Item = u32> + '_ {
    let mut chosen: Option<Vec<usize>> = (size <= members.len()).then(|| (0..size).collect());
    std::iter::from_fn(move || {
        let current = chosen.as_mut()?;
        let mask = current.iter().fold(0u32, |acc, &i| acc | 1 << members[i]);
        match (0..size)
            .rev()
            .find(|&i| current[i] < members.len() - size + i)
        {
            Some(pos) => {
                current[pos] += 1;
                for j in pos + 1..size {
                    current[j] = current[j - 1] + 1;
                }
            }
            None => chosen = None,
        }
        Some(mask)
    })
}

/// Smallest vertex set that is `k`-dominating and `m`-connected, searching
/// sizes up to `size_cap` (default: all of them).
pub fn brute_force_min_mcds(
    g: &Graph,
    k: usize,
    m: u8,
    size_cap: Option<usize>,
) -> Result<OracleResult, OracleError> {
    let n = g.node_count();
    if n > MAX_ORACLE_NODES {
        return Err(OracleError::TooLarge {
            n,
            limit: MAX_ORACLE_NODES,
        });
    }
    if k == 0 {
        return Err(OracleError::InvalidK);
    }
    if !(1..=3).contains(&m) {
        return Err(OracleError::InvalidM(m));
    }
    let masks = Masks::new(g);
    let all: Vec<u32> = (0..n as u32).collect();
    let mut sets_examined = 0;
    for size in 1..=size_cap.unwrap_or(n).min(n) {
        for set in subsets_of_size(&all, size) {
            sets_examined += 1;
            if masks.k_dominating(set, k) && masks.m_connected(set, m) {
                let witness = (0..n).filter(|&v| set & (1 << v) != 0).collect();
                return Ok(OracleResult {
                    optimum_size: Some(size),
                    optimum_witness: Some(witness),
                    sets_examined,
                });
            }
        }
    }
    Ok(OracleResult {
        optimum_size: None,
        optimum_witness: None,
        sets_examined,
    })
}

/// Bitmask m-connectivity, exposed for cross-checking other routes.
pub fn is_m_connected_bitmask(g: &Graph, set: &VertexSet, m: u8) -> Result<bool, OracleError> {
    if g.node_count() > MAX_ORACLE_NODES {
        return Err(OracleError::TooLarge {
            n: g.node_count(),
            limit: MAX_ORACLE_NODES,
        });
    }
    let mask = set.iter().fold(0u32, |acc, &v| acc | 1 << v);
    Ok(Masks::new(g).m_connected(mask, m))
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

    #[test]
    fn p3_center() {
        let r = brute_force_min_mcds(&path(3), 1, 1, None).unwrap();
        assert_eq!(r.optimum_size, Some(1));
        assert_eq!(r.optimum_witness, Some([1].into()));
        assert_eq!(r.sets_examined, 2);
    }

    #[test]
    fn hexagon_needs_four() {
        let r = brute_force_min_mcds(&cycle(6), 1, 1, None).unwrap();
        assert_eq!(r.optimum_size, Some(4));
        assert_eq!(r.optimum_witness, Some([0, 1, 2, 3].into()));
    }

    #[test]
    fn k4_double_domination() {
        let r = brute_force_min_mcds(&complete(4), 2, 1, None).unwrap();
        assert_eq!(r.optimum_size, Some(2));
        assert_eq!(r.optimum_witness, Some([0, 1].into()));
    }

    #[test]
    fn trees_have_no_biconnected_backbone() {
        let r = brute_force_min_mcds(&path(3), 1, 2, None).unwrap();
        assert_eq!(r.optimum_size, None);
        assert_eq!(r.sets_examined, 7);
    }

    #[test]
    fn size_cap_and_limits() {
        let r = brute_force_min_mcds(&cycle(6), 1, 1, Some(3)).unwrap();
        assert_eq!(r.optimum_size, None);
        assert_eq!(r.sets_examined, 6 + 15 + 20);
        assert_eq!(
            brute_force_min_mcds(&Graph::empty(21), 1, 1, None),
            Err(OracleError::TooLarge { n: 21, limit: 20 })
        );
        assert_eq!(
            brute_force_min_mcds(&path(3), 1, 4, None),
            Err(OracleError::InvalidM(4))
        );
    }

    #[test]
    fn subset_enumeration_is_lexicographic() {
        let got: Vec<u32> = subsets_of_size(&[0, 1, 2, 3], 2).collect();
        assert_eq!(got, vec![0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]);
        assert_eq!(subsets_of_size(&[0, 1], 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(subsets_of_size(&[0], 2).count(), 0);
    }
}
