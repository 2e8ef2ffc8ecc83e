//! Blocks (maximal 2-connected subgraphs and bridges) and cut vertices.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    /// Sorted vertex sets, one per block, in lexicographic order.
    pub blocks: Vec<Vec<usize>>,
    /// Sorted cut vertices.
    pub articulation_points: Vec<usize>,
    /// Blocks with at least three vertices.
    pub nontrivial_block_count: usize,
}

impl BlockDecomposition {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

/// Lowpoint DFS with an edge stack. Bridges come out as two-vertex blocks and
/// isolated vertices belong to no block.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.order();
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut time = 0;

    for root in 0..n {
        if disc[root] != UNSEEN || g.degree(root) == 0 {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, UNSEEN, 0usize)];

        while let Some(frame) = stack.last_mut() {
            let (u, parent, ref mut next) = *frame;
            if let Some(&w) = g.neighbors(u).get(*next) {
                *next += 1;
                if disc[w] == UNSEEN {
                    edge_stack.push((u, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if parent == UNSEEN {
                continue;
            }
            low[parent] = low[parent].min(low[u]);
            if low[u] >= disc[parent] {
                if parent != root {
                    is_cut[parent] = true;
                }
                let mut verts = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    verts.push(a);
                    verts.push(b);
                    if (a, b) == (parent, u) {
                        break;
                    }
                }
                verts.sort_unstable();
                verts.dedup();
                blocks.push(verts);
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }

    blocks.sort();
    let nontrivial_block_count = blocks.iter().filter(|b| b.len() >= 3).count();
    BlockDecomposition {
        blocks,
        articulation_points: (0..n).filter(|&v| is_cut[v]).collect(),
        nontrivial_block_count,
    }
}

/// At least three vertices, connected, and no cut vertex.
pub fn is_biconnected(g: &Graph) -> bool {
    if g.order() < 3 {
        return false;
    }
    let d = block_decomposition(g);
    d.blocks.len() == 1 && d.blocks[0].len() == g.order()
}
