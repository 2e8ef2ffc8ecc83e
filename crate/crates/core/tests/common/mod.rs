//! Test-only helpers: closed-form eigenvalue oracles and seeded corpora.

#![allow(dead_code)]

use pathenergy::generators::gnp;
use pathenergy::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Eigenvalues of `[[a, b], [b, d]]`, descending.
pub fn roots_2x2(a: i64, b: i64, d: i64) -> Vec<f64> {
    let (a, b, d) = (a as f64, b as f64, d as f64);
    let mid = (a + d) / 2.0;
    let r = (((a - d) / 2.0).powi(2) + b * b).sqrt();
    vec![mid + r, mid - r]
}

/// Eigenvalues of a symmetric integer 3×3 matrix from its characteristic
/// polynomial, descending. Repeated roots (zero discriminant) are rational
/// and computed exactly; simple roots use the trigonometric form and are
/// polished by Newton steps on the exact integer polynomial.
pub fn roots_3x3(m: [[i64; 3]; 3]) -> Vec<f64> {
    let tr = m[0][0] + m[1][1] + m[2][2];
    let minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0]
        + m[1][1] * m[2][2] - m[1][2] * m[2][1];
    let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    // x³ + b x² + c x + d
    let (b, c, d) = (-tr as i128, minors as i128, -det as i128);
    let disc = 18 * b * c * d - 4 * b.pow(3) * d + b * b * c * c - 4 * c.pow(3) - 27 * d * d;
    assert!(disc >= 0, "symmetric matrices have real roots");
    let mut roots = if disc == 0 {
        let h = b * b - 3 * c;
        if h == 0 {
            vec![-(b as f64) / 3.0; 3]
        } else {
            let double = (9 * d - b * c) as f64 / (2 * h) as f64;
            let simple = (4 * b * c - 9 * d - b.pow(3)) as f64 / h as f64;
            vec![double, double, simple]
        }
    } else {
        let (bf, cf, df) = (b as f64, c as f64, d as f64);
        let p = cf - bf * bf / 3.0;
        let q = 2.0 * bf.powi(3) / 27.0 - bf * cf / 3.0 + df;
        let amp = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (2.0 * p) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
        let phi = arg.acos() / 3.0;
        (0..3)
            .map(|k| {
                let mut x = amp * (phi - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos() - bf / 3.0;
                for _ in 0..3 {
                    let f = ((x + bf) * x + cf) * x + df;
                    let fp = (3.0 * x + 2.0 * bf) * x + cf;
                    if fp != 0.0 {
                        x -= f / fp;
                    }
                }
                x
            })
            .collect()
    };
    roots.sort_by(|x, y| y.total_cmp(x));
    roots
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` seeded `G(n, p)` graphs with `n` uniform in `sizes` and `p`
/// uniform in `[0.2, 0.8]`.
pub fn random_graphs(seed: u64, count: usize, sizes: std::ops::RangeInclusive<usize>) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(sizes.clone());
            let p = r.gen_range(0.2..=0.8);
            gnp(n, p, &mut r)
        })
        .collect()
}

/// The worked four-vertex example: a triangle on {1, 2, 3} with a pendant
/// vertex 0 attached to 1.
pub fn figure_one() -> Graph {
    Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (1, 3)]).unwrap()
}
