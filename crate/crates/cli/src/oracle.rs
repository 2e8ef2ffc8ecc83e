use clap::Args;
use pathenergy::enumerate::connected_graphs;
use pathenergy::generators::gnp;
use pathenergy::{brute_force_disjoint_paths, emit_graph6, max_disjoint_paths, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::output::OutputDocument;
use crate::{CliError, Status};

/// Largest order the exhaustive search handles comfortably.
pub const MAX_CHECK_ORDER: usize = 10;
const EXHAUSTIVE_MAX: usize = 7;

#[derive(Debug, Args, Serialize)]
pub struct OracleArgs {
    /// Largest graph order checked (2..=10).
    #[arg(long, default_value_t = 7)]
    pub max_n: usize,
    /// Random graphs checked on top of the exhaustive part.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Debug, Serialize)]
struct Disagreement {
    graph6: String,
    u: usize,
    v: usize,
    max_flow: usize,
    brute_force: usize,
}

#[derive(Debug, Serialize)]
struct Part {
    graphs: usize,
    pairs: usize,
}

#[derive(Debug, Serialize)]
struct OracleResults {
    seed: u64,
    /// Every connected graph up to this order.
    exhaustive_max_n: usize,
    exhaustive: Part,
    /// Orders drawn for the random part.
    random_n_range: [usize; 2],
    random: Part,
    disagreements: Vec<Disagreement>,
}

fn check(g: &Graph) -> Vec<Disagreement> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let flow = max_disjoint_paths(g, u, v).expect("valid pair");
            let brute = brute_force_disjoint_paths(g, u, v).expect("within oracle limit");
            if flow != brute {
                out.push(Disagreement {
                    graph6: emit_graph6(g).expect("small graph"),
                    u,
                    v,
                    max_flow: flow,
                    brute_force: brute,
                });
            }
        }
    }
    out
}

fn pairs(graphs: &[Graph]) -> usize {
    graphs.iter().map(|g| g.order() * g.order().saturating_sub(1) / 2).sum()
}

pub fn run(args: &OracleArgs) -> Result<Status, CliError> {
    let k = args.max_n;
    if !(2..=MAX_CHECK_ORDER).contains(&k) {
        return Err(CliError(format!("--max-n must be between 2 and {MAX_CHECK_ORDER}, got {k}")));
    }
    let exhaustive_max = k.min(EXHAUSTIVE_MAX);
    let mut exhaustive = Vec::new();
    for n in 2..=exhaustive_max {
        exhaustive.extend(connected_graphs(n)?);
    }
    let lo = k.min(8);
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let random: Vec<Graph> = (0..args.samples)
        .map(|_| {
            let n = rng.gen_range(lo..=k);
            let p = rng.gen_range(0.2..=0.8);
            gnp(n, p, &mut rng)
        })
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| CliError(e.to_string()))?;
    let disagreements: Vec<Disagreement> = pool.install(|| {
        exhaustive
            .par_iter()
            .chain(random.par_iter())
            .flat_map_iter(check)
            .collect()
    });

    let status = if disagreements.is_empty() { Status::Ok } else { Status::Violation };
    let results = OracleResults {
        seed: args.seed,
        exhaustive_max_n: exhaustive_max,
        exhaustive: Part { graphs: exhaustive.len(), pairs: pairs(&exhaustive) },
        random_n_range: [lo, k],
        random: Part { graphs: random.len(), pairs: pairs(&random) },
        disagreements,
    };
    OutputDocument::new("oracle-check", args, results).print()?;
    Ok(status)
}
