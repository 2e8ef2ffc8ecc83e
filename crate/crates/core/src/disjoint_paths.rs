//! Maximum numbers of internally vertex-disjoint paths and the path matrix.
//!
//! Counts come from unit-capacity max-flow on the vertex-split digraph. Every
//! vertex `w` other than the two terminals becomes `w_in -> w_out` with
//! capacity 1, and every edge `{a, b}` becomes the arcs `a_out -> b_in` and
//! `b_out -> a_in`, each of capacity 1. An edge joining the terminals is an arc
//! `s_out -> t_in` and carries one unit on its own, so adjacent pairs need no
//! special case.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy)]
struct Arc {
    to: usize,
    cap: u32,
}

/// Residual network with paired arcs (`i ^ 1` is the reverse of `i`).
struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    /// Shortest augmenting paths; each augmentation carries one unit since
    /// every source-side arc has capacity 1.
    fn max_flow(&mut self, source: usize, sink: usize, limit: u32) -> u32 {
        let nodes = self.out.len();
        let mut flow = 0;
        let mut via = vec![usize::MAX; nodes];
        while flow < limit {
            via.iter_mut().for_each(|x| *x = usize::MAX);
            let mut queue = VecDeque::from([source]);
            let mut reached = false;
            'bfs: while let Some(x) = queue.pop_front() {
                for &a in &self.out[x] {
                    let Arc { to, cap } = self.arcs[a];
                    if cap > 0 && to != source && via[to] == usize::MAX {
                        via[to] = a;
                        if to == sink {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(to);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut x = sink;
            while x != source {
                let a = via[x];
                self.arcs[a].cap -= 1;
                self.arcs[a ^ 1].cap += 1;
                x = self.arcs[a ^ 1].to;
            }
            flow += 1;
        }
        flow
    }
}

fn check_pair(g: &Graph, u: usize, v: usize) -> Result<()> {
    let n = g.order();
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(())
}

fn flow_count(g: &Graph, u: usize, v: usize) -> usize {
    let n = g.order();
    let (vin, vout) = (|w: usize| 2 * w, |w: usize| 2 * w + 1);
    let mut net = FlowNetwork::new(2 * n);
    for w in 0..n {
        let cap = if w == u || w == v { n as u32 } else { 1 };
        net.add_arc(vin(w), vout(w), cap);
    }
    for &(a, b) in g.edges() {
        net.add_arc(vout(a), vin(b), 1);
        net.add_arc(vout(b), vin(a), 1);
    }
    let limit = g.degree(u).min(g.degree(v)) as u32;
    net.max_flow(vout(u), vin(v), limit) as usize
}

/// Maximum number of `u`–`v` paths that pairwise share only their endpoints.
pub fn max_disjoint_paths(g: &Graph, u: usize, v: usize) -> Result<usize> {
    check_pair(g, u, v)?;
    let labels = g.component_labels();
    if labels[u] != labels[v] {
        return Ok(0);
    }
    Ok(flow_count(g, u, v))
}

/// Symmetric matrix of pairwise disjoint-path counts with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl PathMatrix {
    pub fn from_rows(rows: &[Vec<u32>]) -> Self {
        let n = rows.len();
        PathMatrix {
            n,
            entries: rows.iter().flat_map(|r| r.iter().copied()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn row_sum(&self, i: usize) -> u64 {
        self.row(i).iter().map(|&x| x as u64).sum()
    }

    pub fn max_entry(&self) -> u32 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|&x| x as f64).collect())
            .collect()
    }

    /// Σ p_ij² over all entries.
    pub fn frobenius_sq(&self) -> f64 {
        self.entries.iter().map(|&x| (x as f64).powi(2)).sum()
    }

    /// True when every off-diagonal entry equals `value`.
    pub fn off_diagonal_all(&self, value: u32) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j) == value))
    }
}

/// Path matrix of `g`. Each unordered pair is solved once; the result does not
/// depend on evaluation order.
pub fn path_matrix(g: &Graph) -> PathMatrix {
    let n = g.order();
    let labels = g.component_labels();
    let mut entries = vec![0u32; n * n];
    for u in 0..n {
        for v in u + 1..n {
            if labels[u] != labels[v] {
                continue;
            }
            let k = flow_count(g, u, v) as u32;
            entries[u * n + v] = k;
            entries[v * n + u] = k;
        }
    }
    PathMatrix { n, entries }
}
