//! Exhaustive search for internally vertex-disjoint path families.
//!
//! Shares nothing with the max-flow route in [`crate::disjoint_paths`]: it
//! enumerates simple paths directly and maximises the number of paths whose
//! interiors are pairwise disjoint. Exponential; intended for cross-checks on
//! small graphs only.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Size guard for [`brute_force_disjoint_paths`].
pub const ORACLE_MAX_ORDER: usize = 12;

struct Search<'a> {
    g: &'a Graph,
    /// Neighbours of the source other than the target, in order.
    starts: Vec<usize>,
    target_nbrs: u64,
}

impl Search<'_> {
    /// Best count using start vertices `starts[from..]`, with `free` the set of
    /// vertices still usable as path interiors.
    fn best(&self, from: usize, free: u64) -> usize {
        let open_starts = self.starts[from..].iter().filter(|&&x| free >> x & 1 == 1).count();
        let open_ends = (self.target_nbrs & free).count_ones() as usize;
        let cap = open_starts.min(open_ends);
        if cap == 0 {
            return 0;
        }
        let x = self.starts[from];
        let mut best = self.best(from + 1, free);
        if free >> x & 1 == 0 || best == cap {
            return best;
        }
        // Every path leaving the source through x.
        let mut interiors = Vec::new();
        self.paths_from(x, free & !(1 << x), 1 << x, &mut interiors);
        for used in interiors {
            best = best.max(1 + self.best(from + 1, free & !used));
            if best == cap {
                break;
            }
        }
        best
    }

    /// Collects interiors of simple paths `x ... y` inside `free` with `y`
    /// adjacent to the target. Extending a path past such a `y` only adds
    /// interior vertices, so the walk stops there.
    fn paths_from(&self, at: usize, free: u64, used: u64, out: &mut Vec<u64>) {
        if self.target_nbrs >> at & 1 == 1 {
            out.push(used);
            return;
        }
        for &w in self.g.neighbors(at) {
            if free >> w & 1 == 1 {
                self.paths_from(w, free & !(1 << w), used | 1 << w, out);
            }
        }
    }
}

/// Exhaustive maximum number of internally vertex-disjoint `u`–`v` paths.
pub fn brute_force_disjoint_paths(g: &Graph, u: usize, v: usize) -> Result<usize> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::OracleTooLarge { n, limit: ORACLE_MAX_ORDER });
    }
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if u == v {
        return Err(Error::SameVertex(u));
    }
    let direct = usize::from(g.neighbors(u).contains(&v));
    let interior_ok: u64 = (0..n).filter(|&w| w != u && w != v).fold(0, |m, w| m | 1 << w);
    let search = Search {
        g,
        starts: g.neighbors(u).iter().copied().filter(|&x| x != v).collect(),
        target_nbrs: g
            .neighbors(v)
            .iter()
            .filter(|&&x| x != u)
            .fold(0, |m, &x| m | 1 << x),
    };
    Ok(direct + search.best(0, interior_ok))
}
