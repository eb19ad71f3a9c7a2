//! Undirected simple graphs with sorted adjacency.
//!
//! Node ids are `0..node_count`. Every neighbor list is sorted and free of
//! duplicates, so iteration order is deterministic everywhere downstream.

use std::collections::{BTreeSet, VecDeque};

use crate::error::GraphError;

/// A set of node ids, iterated in ascending order.
pub type VertexSet = BTreeSet<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph with `n` isolated nodes.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse into one; self-loops and out-of-range ids are
    /// rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(GraphError::NodeOutOfRange { id, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn nodes(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Full scan of the structural invariants: symmetric, loop-free, sorted,
    /// duplicate-free.
    pub fn is_well_formed(&self) -> bool {
        let n = self.adj.len();
        self.adj.iter().enumerate().all(|(u, list)| {
            list.windows(2).all(|w| w[0] < w[1])
                && list.iter().all(|&v| v < n && v != u && self.has_edge(v, u))
        })
    }

    /// Membership mask for a vertex set.
    pub fn mask(&self, set: &VertexSet) -> Vec<bool> {
        let mut mask = vec![false; self.node_count()];
        for &v in set {
            mask[v] = true;
        }
        mask
    }

    /// Number of edges with both endpoints in `set`.
    pub fn induced_edge_count(&self, set: &VertexSet) -> usize {
        let mask = self.mask(set);
        set.iter()
            .map(|&u| self.adj[u].iter().filter(|&&v| v > u && mask[v]).count())
            .sum()
    }

    /// BFS hop count from `u` to `v`; `None` when no path exists.
    pub fn hop_distance(&self, u: usize, v: usize) -> Option<usize> {
        if u == v {
            return Some(0);
        }
        self.bfs_distances(u)[v]
    }

    /// Hop distances from `source` to every node.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        self.bfs_within(source, None, usize::MAX)
    }

    /// BFS from `source`, optionally restricted to a node mask, stopping at
    /// depth `limit`.
    pub(crate) fn bfs_within(
        &self,
        source: usize,
        allowed: Option<&[bool]>,
        limit: usize,
    ) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.node_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            if dx == limit {
                continue;
            }
            for &y in &self.adj[x] {
                if dist[y].is_none() && allowed.is_none_or(|a| a[y]) {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        let all: VertexSet = self.nodes().collect();
        self.is_induced_connected(&all)
    }

    /// Whether the subgraph induced by `set` is connected. The empty set is
    /// not considered connected.
    pub fn is_induced_connected(&self, set: &VertexSet) -> bool {
        match set.first() {
            None => false,
            Some(&start) => {
                let mask = self.mask(set);
                let dist = self.bfs_within(start, Some(&mask), usize::MAX);
                set.iter().all(|&v| dist[v].is_some())
            }
        }
    }

    /// Connected components of the subgraph induced by `set`, each sorted,
    /// ordered by smallest member.
    pub fn induced_components(&self, set: &VertexSet) -> Vec<Vec<usize>> {
        let mask = self.mask(set);
        let mut seen = vec![false; self.node_count()];
        let mut components = Vec::new();
        for &start in set {
            if seen[start] {
                continue;
            }
            let dist = self.bfs_within(start, Some(&mask), usize::MAX);
            let component: Vec<usize> =
                set.iter().copied().filter(|&v| dist[v].is_some()).collect();
            for &v in &component {
                seen[v] = true;
            }
            components.push(component);
        }
        components
    }

    /// Shortest `u`–`v` path that avoids `forbidden` and whose internal
    /// vertices all satisfy `internal_ok`. Among equally short paths the
    /// lexicographically smallest vertex sequence is returned.
    pub fn shortest_path<F>(
        &self,
        u: usize,
        v: usize,
        forbidden: &VertexSet,
        internal_ok: F,
    ) -> Option<Vec<usize>>
    where
        F: Fn(usize) -> bool,
    {
        if forbidden.contains(&u) || forbidden.contains(&v) {
            return None;
        }
        if u == v {
            return Some(vec![u]);
        }
        let allowed = |x: usize| !forbidden.contains(&x) && internal_ok(x);
        self.route(&[u], |x| x == v, allowed, |x| forbidden.contains(&x))
    }

    /// Shortest route starting at one of `starts` and ending at the first
    /// vertex satisfying `is_target`, where every vertex strictly between the
    /// two endpoints satisfies `internal_ok` and no vertex is `blocked`.
    ///
    /// Ties are broken toward the lexicographically smallest sequence. A
    /// start vertex that is itself a target yields a one-vertex route.
    pub(crate) fn route<T, I, B>(
        &self,
        starts: &[usize],
        is_target: T,
        internal_ok: I,
        blocked: B,
    ) -> Option<Vec<usize>>
    where
        T: Fn(usize) -> bool,
        I: Fn(usize) -> bool,
        B: Fn(usize) -> bool,
    {
        // Distances to the nearest target, expanding only through vertices
        // that may sit in the interior of a route.
        let n = self.node_count();
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for x in self.nodes().filter(|&x| is_target(x) && !blocked(x)) {
            dist[x] = 0;
            queue.push_back(x);
        }
        while let Some(x) = queue.pop_front() {
            if dist[x] > 0 && !internal_ok(x) {
                continue;
            }
            for &y in &self.adj[x] {
                if dist[y] == usize::MAX && !blocked(y) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }

        let start = starts
            .iter()
            .copied()
            .filter(|&s| !blocked(s) && dist[s] != usize::MAX)
            .min_by_key(|&s| (dist[s], s))?;
        let mut path = vec![start];
        let mut x = start;
        while dist[x] > 0 {
            let next = self.adj[x]
                .iter()
                .copied()
                .find(|&y| {
                    dist[y] != usize::MAX
                        && dist[y] + 1 == dist[x]
                        && (dist[y] == 0 || internal_ok(y))
                })
                .expect("BFS layering guarantees a predecessor");
            path.push(next);
            x = next;
        }
        Some(path)
    }
}
