//! Biconnected-component (block) decomposition of induced subgraphs.

use crate::error::GraphError;
use crate::graph::{Graph, VertexSet};

/// Blocks and cut vertices of a connected induced subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutTree {
    /// Each block sorted ascending; blocks ordered by smallest member, then
    /// lexicographically.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: VertexSet,
    /// Indices into `blocks` of the blocks holding exactly one cut vertex.
    /// Empty when there is a single block.
    pub leaf_blocks: Vec<usize>,
}

impl BlockCutTree {
    pub fn leaf_block(&self, i: usize) -> &[usize] {
        &self.blocks[self.leaf_blocks[i]]
    }

    /// A single block of three or more vertices: the subgraph is 2-connected.
    pub fn is_biconnected(&self) -> bool {
        self.blocks.len() == 1 && self.blocks[0].len() >= 3
    }
}

/// Decomposes the subgraph induced by `subset` into blocks with an
/// iterative Hopcroft–Tarjan lowpoint search.
pub fn block_cut_tree(g: &Graph, subset: &VertexSet) -> Result<BlockCutTree, GraphError> {
    let Some(&root) = subset.first() else {
        return Err(GraphError::EmptyGraph);
    };
    let n = g.node_count();
    if let Some(&id) = subset.last().filter(|&&id| id >= n) {
        return Err(GraphError::NodeOutOfRange { id, n });
    }
    let inside = g.mask(subset);

    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut cut_vertices = VertexSet::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    // (vertex, parent, next neighbor index)
    let mut frames: Vec<(usize, usize, usize)> = vec![(root, UNSEEN, 0)];
    let mut root_children = 0;
    disc[root] = timer;
    low[root] = timer;
    timer += 1;

    while let Some(frame) = frames.last_mut() {
        let (u, parent, idx) = *frame;
        if let Some(&w) = g.neighbors(u).get(idx) {
            frame.2 += 1;
            if !inside[w] || w == parent {
                continue;
            }
            if disc[w] == UNSEEN {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                edge_stack.push((u, w));
                if u == root {
                    root_children += 1;
                }
                frames.push((w, u, 0));
            } else if disc[w] < disc[u] {
                edge_stack.push((u, w));
                low[u] = low[u].min(disc[w]);
            }
            continue;
        }

        frames.pop();
        if parent == UNSEEN {
            continue;
        }
        low[parent] = low[parent].min(low[u]);
        if low[u] >= disc[parent] {
            if parent != root {
                cut_vertices.insert(parent);
            }
            let mut block = Vec::new();
            while let Some((a, b)) = edge_stack.pop() {
                block.push(a);
                block.push(b);
                if (a, b) == (parent, u) {
                    break;
                }
            }
            block.sort_unstable();
            block.dedup();
            blocks.push(block);
        }
    }

    if root_children >= 2 {
        cut_vertices.insert(root);
    }
    if subset.iter().any(|&v| disc[v] == UNSEEN) {
        return Err(GraphError::DisconnectedInput);
    }
    if blocks.is_empty() {
        blocks.push(vec![root]);
    }
    blocks.sort();

    let leaf_blocks = if blocks.len() == 1 {
        Vec::new()
    } else {
        blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.iter().filter(|v| cut_vertices.contains(v)).count() == 1)
            .map(|(i, _)| i)
            .collect()
    };

    Ok(BlockCutTree {
        blocks,
        cut_vertices,
        leaf_blocks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(g: &Graph) -> VertexSet {
        g.nodes().collect()
    }

    #[test]
    fn path_has_two_leaf_blocks() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let bct = block_cut_tree(&g, &all(&g)).unwrap();
        assert_eq!(bct.blocks, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(bct.cut_vertices, [1].into());
        assert_eq!(bct.leaf_blocks, vec![0, 1]);
    }

    #[test]
    fn triangle_is_one_block() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let bct = block_cut_tree(&g, &all(&g)).unwrap();
        assert_eq!(bct.blocks, vec![vec![0, 1, 2]]);
        assert!(bct.cut_vertices.is_empty());
        assert!(bct.leaf_blocks.is_empty());
        assert!(bct.is_biconnected());
    }

    #[test]
    fn bowtie_shares_vertex_two() {
        let g =
            Graph::from_edge_list(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let bct = block_cut_tree(&g, &all(&g)).unwrap();
        assert_eq!(bct.blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(bct.cut_vertices, [2].into());
        assert_eq!(bct.leaf_blocks, vec![0, 1]);
    }

    #[test]
    fn induced_subset_only() {
        // C4 restricted to {0,1,2} is the path 0-1-2.
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let bct = block_cut_tree(&g, &[0, 1, 2].into()).unwrap();
        assert_eq!(bct.blocks, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(bct.cut_vertices, [1].into());
    }

    #[test]
    fn middle_block_is_not_a_leaf() {
        // 0-1, triangle 1-2-3, 3-4
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        let bct = block_cut_tree(&g, &all(&g)).unwrap();
        assert_eq!(bct.blocks, vec![vec![0, 1], vec![1, 2, 3], vec![3, 4]]);
        assert_eq!(bct.leaf_blocks, vec![0, 2]);
    }

    #[test]
    fn single_vertex_and_errors() {
        let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        let bct = block_cut_tree(&g, &[2].into()).unwrap();
        assert_eq!(bct.blocks, vec![vec![2]]);
        assert_eq!(
            block_cut_tree(&g, &all(&g)),
            Err(GraphError::DisconnectedInput)
        );
        assert_eq!(
            block_cut_tree(&g, &VertexSet::new()),
            Err(GraphError::EmptyGraph)
        );
    }
}
