//! Graph families, graph operators and seeded random graphs.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn invalid(family: &str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        family: family.to_string(),
        reason: reason.into(),
    }
}

fn require(family: &str, ok: bool, reason: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(invalid(family, reason))
    }
}

// Generator inputs are small by nature; this keeps n^2 allocations sane.
const MAX_ORDER: usize = 1 << 16;

pub fn complete_graph(p: usize) -> Result<Graph> {
    require("complete", (1..=MAX_ORDER).contains(&p), "p >= 1")?;
    Ok(Graph::from_edges_lossy(
        p,
        (0..p).flat_map(|u| (u + 1..p).map(move |v| (u, v))),
    ))
}

/// `K_{p,q}`. Arguments are normalised so that the first `min(p, q)` vertices
/// form the smaller part.
pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    require("complete_bipartite", p >= 1 && q >= 1, "p, q >= 1")?;
    require("complete_bipartite", p + q <= MAX_ORDER, "too many vertices")?;
    let (a, b) = (p.min(q), p.max(q));
    Ok(Graph::from_edges_lossy(
        a + b,
        (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))),
    ))
}

pub fn cycle(p: usize) -> Result<Graph> {
    require("cycle", (3..=MAX_ORDER).contains(&p), "p >= 3")?;
    Ok(Graph::from_edges_lossy(p, (0..p).map(|i| (i, (i + 1) % p))))
}

pub fn path_graph(p: usize) -> Result<Graph> {
    require("path", (1..=MAX_ORDER).contains(&p), "p >= 1")?;
    Ok(Graph::from_edges_lossy(p, (1..p).map(|i| (i - 1, i))))
}

/// Star on `p` vertices: hub 0 joined to `p - 1` leaves.
pub fn star(p: usize) -> Result<Graph> {
    require("star", (1..=MAX_ORDER).contains(&p), "p >= 1")?;
    Ok(Graph::from_edges_lossy(p, (1..p).map(|i| (0, i))))
}

/// `Q_d` on `2^d` vertices; `u ~ v` iff the labels differ in one bit.
pub fn hypercube(d: usize) -> Result<Graph> {
    require("hypercube", (1..=16).contains(&d), "1 <= d <= 16")?;
    let n = 1usize << d;
    Ok(Graph::from_edges_lossy(
        n,
        (0..n).flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b)))),
    ))
}

/// Wheel on `p` vertices: hub 0 plus a rim cycle `1..p`.
pub fn wheel(p: usize) -> Result<Graph> {
    require("wheel", (4..=MAX_ORDER).contains(&p), "p >= 4")?;
    let rim = p - 1;
    let spokes = (1..p).map(|i| (0, i));
    let ring = (0..rim).map(|i| (1 + i, 1 + (i + 1) % rim));
    Ok(Graph::from_edges_lossy(p, spokes.chain(ring)))
}

/// Circular ladder on `2p` vertices: two `p`-cycles joined by rungs `i ~ p + i`.
pub fn prism(p: usize) -> Result<Graph> {
    require("prism", (3..=MAX_ORDER / 2).contains(&p), "p >= 3")?;
    let edges = (0..p).flat_map(|i| {
        let j = (i + 1) % p;
        [(i, j), (p + i, p + j), (i, p + i)]
    });
    Ok(Graph::from_edges_lossy(2 * p, edges))
}

/// Antiprism on `2p` vertices: two `p`-cycles with `i` joined to `p + i` and
/// `p + i + 1`.
pub fn antiprism(p: usize) -> Result<Graph> {
    require("antiprism", (3..=MAX_ORDER / 2).contains(&p), "p >= 3")?;
    let edges = (0..p).flat_map(|i| {
        let j = (i + 1) % p;
        [(i, j), (p + i, p + j), (i, p + i), (i, p + j)]
    });
    Ok(Graph::from_edges_lossy(2 * p, edges))
}

/// Harary graph `H_{r,k}`: an `r`-regular, `r`-connected graph on `k` vertices.
///
/// Vertex `i` is joined to `i ± 1, ..., i ± ⌊r/2⌋` (mod `k`); for odd `r` it is
/// also joined to its antipode `i + k/2`.
pub fn harary(r: usize, k: usize) -> Result<Graph> {
    let fam = "regular";
    require(fam, k <= MAX_ORDER, "too many vertices")?;
    require(fam, r >= 1 && r < k, "1 <= r < k")?;
    require(fam, (r * k).is_multiple_of(2), "r * k must be even")?;
    require(fam, r >= 2 || k == 2, "r = 1 is only connected for k = 2")?;
    let half = r / 2;
    let mut edges: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (1..=half).map(move |s| (i, (i + s) % k)))
        .collect();
    if r % 2 == 1 {
        edges.extend((0..k / 2).map(|i| (i, i + k / 2)));
    }
    Ok(Graph::from_edges_lossy(k, edges))
}

/// Line graph: one vertex per edge of `g` (in `g.edges()` order), adjacent
/// when the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let mut incident = vec![Vec::new(); g.order()];
    for (idx, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push(idx);
        incident[v].push(idx);
    }
    let edges = incident.iter().flat_map(|inc| {
        inc.iter()
            .enumerate()
            .flat_map(move |(i, &a)| inc[i + 1..].iter().map(move |&b| (a, b)))
    });
    Graph::from_edges_lossy(g.size(), edges)
}

/// Cartesian product; vertex `(a, x)` gets index `a * h.order() + x`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let hn = h.order();
    let idx = move |a: usize, x: usize| a * hn + x;
    let along_h = (0..g.order()).flat_map(|a| h.edges().iter().map(move |&(x, y)| (idx(a, x), idx(a, y))));
    let along_g = g
        .edges()
        .iter()
        .flat_map(|&(a, b)| (0..hn).map(move |x| (idx(a, x), idx(b, x))));
    Graph::from_edges_lossy(g.order() * hn, along_h.chain(along_g).collect::<Vec<_>>())
}

/// Families with a closed-form path spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Complete,
    Regular,
    Tree,
    CompleteBipartite,
    Hypercube,
    HypercubeProduct,
    Wheel,
    LineOfComplete,
    LineOfCompleteBipartite,
    Prism,
    Antiprism,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Complete,
        Family::Regular,
        Family::Tree,
        Family::CompleteBipartite,
        Family::Hypercube,
        Family::HypercubeProduct,
        Family::Wheel,
        Family::LineOfComplete,
        Family::LineOfCompleteBipartite,
        Family::Prism,
        Family::Antiprism,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Regular => "regular",
            Family::Tree => "tree",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Hypercube => "hypercube",
            Family::HypercubeProduct => "hypercube_product",
            Family::Wheel => "wheel",
            Family::LineOfComplete => "line_of_complete",
            Family::LineOfCompleteBipartite => "line_of_complete_bipartite",
            Family::Prism => "prism",
            Family::Antiprism => "antiprism",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }

    /// Number of integer parameters the family takes.
    pub fn arity(self) -> usize {
        match self {
            Family::Regular
            | Family::CompleteBipartite
            | Family::HypercubeProduct
            | Family::LineOfCompleteBipartite => 2,
            _ => 1,
        }
    }

    /// A representative instance. `tree` yields the path graph and `regular`
    /// with parameters `(r, k)` yields the Harary graph `H_{r,k}`.
    pub fn generate(self, params: &[usize]) -> Result<Graph> {
        check_arity(self.name(), params, self.arity())?;
        match self {
            Family::Complete => complete_graph(params[0]),
            Family::Regular => harary(params[0], params[1]),
            Family::Tree => path_graph(params[0]),
            Family::CompleteBipartite => complete_bipartite(params[0], params[1]),
            Family::Hypercube => hypercube(params[0]),
            Family::HypercubeProduct => {
                let (p, q) = (params[0], params[1]);
                require(self.name(), p + q <= 16, "p + q <= 16")?;
                Ok(cartesian_product(&hypercube(p)?, &hypercube(q)?))
            }
            Family::Wheel => wheel(params[0]),
            Family::LineOfComplete => {
                require(self.name(), (2..=362).contains(&params[0]), "2 <= p <= 362")?;
                Ok(line_graph(&complete_graph(params[0])?))
            }
            Family::LineOfCompleteBipartite => {
                require(self.name(), params[0] * params[1] <= MAX_ORDER, "too many vertices")?;
                Ok(line_graph(&complete_bipartite(params[0], params[1])?))
            }
            Family::Prism => prism(params[0]),
            Family::Antiprism => antiprism(params[0]),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

fn check_arity(family: &str, params: &[usize], arity: usize) -> Result<()> {
    if params.len() == arity {
        Ok(())
    } else {
        Err(invalid(
            family,
            format!("expected {arity} parameter(s), got {}", params.len()),
        ))
    }
}

/// Builds a graph by family name. Accepts every [`Family`] name plus the
/// generator-only names `cycle`, `path`, `tree-path` (alias of `path`) and
/// `star`.
pub fn by_name(name: &str, params: &[usize]) -> Result<Graph> {
    if let Some(f) = Family::from_name(name) {
        return f.generate(params);
    }
    let one = |build: fn(usize) -> Result<Graph>| {
        check_arity(name, params, 1)?;
        build(params[0])
    };
    match name {
        "cycle" => one(cycle),
        "path" | "tree-path" => one(path_graph),
        "star" => one(star),
        _ => Err(Error::UnknownFamily(name.to_string())),
    }
}

/// Names accepted by [`by_name`].
pub fn family_names() -> Vec<&'static str> {
    let mut names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
    names.extend(["cycle", "path", "tree-path", "star"]);
    names
}

/// Erdős–Rényi `G(n, prob)`.
pub fn gnp<R: Rng + ?Sized>(n: usize, prob: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(prob.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges_lossy(n, edges)
}

/// Uniform labelled tree on `n` vertices, decoded from a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    if n <= 2 {
        return Graph::from_edges_lossy(n, (1..n).map(|i| (0, i)));
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges_lossy(n, edges)
}

/// A uniformly random relabelling of `g`.
pub fn shuffle_labels<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.relabel(&perm).expect("shuffled identity is a permutation")
}
