//! Exhaustive, isomorphism-free graph corpora for small orders.
//!
//! Graphs are canonicalised by individualisation-refinement: colour refinement
//! to an equitable ordered partition, then branching over the vertices of the
//! first non-singleton cell. The canonical code is the largest upper-triangle
//! bit string over all discrete leaves. Vertices in a cell whose members are
//! pairwise twins are interchangeable, so only one of them is branched on.
//!
//! Corpora are built by vertex extension (every graph on `n` vertices minus its
//! last vertex is a graph on `n - 1` vertices) and deduplicated by code. Trees
//! grow by leaf addition and unicyclic graphs are trees plus one edge.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the canonical code supports (45 bits for `n = 10`).
pub const MAX_ENUM_ORDER: usize = 10;

type Cells = Vec<Vec<usize>>;

struct Canon {
    n: usize,
    rows: Vec<u16>,
    best: Option<u64>,
}

impl Canon {
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let mask = !((1u16 << u) | (1u16 << v));
        self.rows[u] & mask == self.rows[v] & mask
    }

    /// Splits cells by neighbour counts into every cell until stable. Pieces of
    /// a split cell are ordered by their count vectors.
    fn refine(&self, mut cells: Cells) -> Cells {
        loop {
            let mut cell_of = vec![0usize; self.n];
            for (i, c) in cells.iter().enumerate() {
                for &v in c {
                    cell_of[v] = i;
                }
            }
            let k = cells.len();
            let signature = |v: usize| {
                let mut counts = vec![0u8; k];
                for w in 0..self.n {
                    if self.adjacent(v, w) {
                        counts[cell_of[w]] += 1;
                    }
                }
                counts
            };
            let mut next: Cells = Vec::with_capacity(self.n);
            for c in &cells {
                if c.len() == 1 {
                    next.push(c.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u8>, usize)> = c.iter().map(|&v| (signature(v), v)).collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn code(&self, cells: &Cells) -> u64 {
        let mut pos = vec![0usize; self.n];
        for (i, c) in cells.iter().enumerate() {
            pos[c[0]] = i;
        }
        let mut order = vec![0usize; self.n];
        for v in 0..self.n {
            order[pos[v]] = v;
        }
        let mut code = 0u64;
        for j in 1..self.n {
            for i in 0..j {
                code = code << 1 | self.adjacent(order[i], order[j]) as u64;
            }
        }
        code
    }

    fn search(&mut self, cells: Cells) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let code = self.code(&cells);
            self.best = Some(self.best.map_or(code, |b| b.max(code)));
            return;
        };
        let cell = &cells[target];
        let all_twins = cell
            .iter()
            .enumerate()
            .all(|(i, &u)| cell[i + 1..].iter().all(|&v| self.twins(u, v)));
        let branch: Vec<usize> = if all_twins { vec![cell[0]] } else { cell.clone() };
        for v in branch {
            let mut split = cells.clone();
            let rest: Vec<usize> = split[target].iter().copied().filter(|&w| w != v).collect();
            split[target] = vec![v];
            split.insert(target + 1, rest);
            let refined = self.refine(split);
            self.search(refined);
        }
    }
}

/// Canonical code: equal for two graphs iff they are isomorphic.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    let n = g.order();
    if n > MAX_ENUM_ORDER {
        return Err(Error::TooLarge { n, limit: MAX_ENUM_ORDER });
    }
    let mut rows = vec![0u16; n];
    for &(u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    let mut canon = Canon { n, rows, best: None };
    if n == 0 {
        return Ok(0);
    }
    let start = canon.refine(vec![(0..n).collect()]);
    canon.search(start);
    Ok(canon.best.expect("search visits at least one leaf"))
}

/// Rebuilds the canonical representative from `(n, code)`.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges_lossy(n, edges)
}

/// Canonical form of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(graph_from_code(g.order(), canonical_code(g)?))
}

fn dedup_sorted(n: usize, codes: HashSet<u64>) -> Vec<Graph> {
    let mut codes: Vec<u64> = codes.into_iter().collect();
    codes.sort_unstable();
    codes.into_iter().map(|c| graph_from_code(n, c)).collect()
}

fn check(n: usize) -> Result<()> {
    if n > MAX_ENUM_ORDER {
        Err(Error::TooLarge { n, limit: MAX_ENUM_ORDER })
    } else {
        Ok(())
    }
}

/// All graphs on `n` vertices up to isomorphism, ordered by canonical code.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    check(n)?;
    let mut layer = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut codes = HashSet::new();
        for g in &layer {
            for mask in 0u32..(1 << (k - 1)) {
                let extra = (0..k - 1).filter(|&i| mask >> i & 1 == 1).map(|i| (i, k - 1));
                let h = Graph::from_edges_lossy(k, g.edges().iter().copied().chain(extra));
                codes.insert(canonical_code(&h)?);
            }
        }
        layer = dedup_sorted(k, codes);
    }
    Ok(layer)
}

/// Connected graphs on `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?.into_iter().filter(Graph::is_connected).collect())
}

/// Trees on `n >= 1` vertices up to isomorphism.
pub fn trees(n: usize) -> Result<Vec<Graph>> {
    check(n)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut layer = vec![Graph::empty(1)];
    for k in 2..=n {
        let mut codes = HashSet::new();
        for t in &layer {
            for attach in 0..k - 1 {
                let h = Graph::from_edges_lossy(
                    k,
                    t.edges().iter().copied().chain([(attach, k - 1)]),
                );
                codes.insert(canonical_code(&h)?);
            }
        }
        layer = dedup_sorted(k, codes);
    }
    Ok(layer)
}

/// Connected unicyclic graphs on `n` vertices up to isomorphism.
pub fn unicyclic_graphs(n: usize) -> Result<Vec<Graph>> {
    let mut codes = HashSet::new();
    for t in trees(n)? {
        for u in 0..n {
            for v in u + 1..n {
                if let Some(h) = t.with_edge(u, v) {
                    codes.insert(canonical_code(&h)?);
                }
            }
        }
    }
    Ok(dedup_sorted(n, codes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path_graph, shuffle_labels, star};
    use rand::SeedableRng;

    #[test]
    fn counts_match_known_sequences() {
        // Numbers of graphs, connected graphs on n = 0..=7 vertices.
        let all = [1, 1, 2, 4, 11, 34, 156, 1044];
        let connected = [0, 1, 1, 2, 6, 21, 112, 853];
        for n in 0..=7 {
            let gs = all_graphs(n).unwrap();
            assert_eq!(gs.len(), all[n], "graphs on {n}");
            assert_eq!(gs.iter().filter(|g| g.is_connected()).count(), connected[n]);
        }
    }

    #[test]
    fn tree_and_unicyclic_counts() {
        let tree_counts = [1, 1, 1, 2, 3, 6, 11, 23, 47];
        for (i, &c) in tree_counts.iter().enumerate() {
            assert_eq!(trees(i + 1).unwrap().len(), c, "trees on {}", i + 1);
        }
        let uni = [(3, 1), (4, 2), (5, 5), (6, 13), (7, 33), (8, 89), (9, 240)];
        for (n, c) in uni {
            assert_eq!(unicyclic_graphs(n).unwrap().len(), c, "unicyclic on {n}");
        }
    }

    #[test]
    fn code_is_relabelling_invariant() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for g in all_graphs(6).unwrap() {
            let code = canonical_code(&g).unwrap();
            for _ in 0..3 {
                assert_eq!(canonical_code(&shuffle_labels(&g, &mut rng)).unwrap(), code);
            }
        }
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let p = path_graph(4).unwrap();
        let s = star(4).unwrap();
        assert_ne!(canonical_code(&p).unwrap(), canonical_code(&s).unwrap());
        let c = cycle(6).unwrap();
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_ne!(canonical_code(&c).unwrap(), canonical_code(&two_triangles).unwrap());
    }

    #[test]
    fn canonical_form_round_trips() {
        let g = cycle(5).unwrap();
        let f = canonical_form(&g).unwrap();
        assert_eq!(canonical_code(&f).unwrap(), canonical_code(&g).unwrap());
        assert!(canonical_code(&Graph::empty(11)).is_err());
    }
}
