//! Symmetric eigenvalues, path and adjacency spectra, energies and sign counts.

use serde::{Deserialize, Serialize};

use crate::disjoint_paths::{path_matrix, PathMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Relative scale of the sign-classification tolerance:
/// `ε = SIGN_TOL_SCALE · n · max|entry|`.
pub const SIGN_TOL_SCALE: f64 = 1e-8;

/// Eigenvalues within this multiple of `ε` of zero (but outside `ε`) are
/// borderline.
pub const BORDERLINE_FACTOR: f64 = 10.0;

const MAX_SWEEPS: usize = 64;

/// `ε = scale · n · max|entry|`.
pub fn sign_tolerance(n: usize, max_abs_entry: f64, scale: f64) -> f64 {
    scale * n as f64 * max_abs_entry
}

/// Eigenvalues sorted in descending order, with the tolerance used to classify
/// their signs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignCounts {
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Σ |λ|.
    pub fn energy(&self) -> f64 {
        self.values.iter().map(|x| x.abs()).sum()
    }

    /// max |λ|, 0 when empty.
    pub fn radius(&self) -> f64 {
        self.values.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum()
    }

    /// `λ > ε` is positive, `λ < −ε` negative, anything else zero.
    pub fn count_signs(&self) -> SignCounts {
        let mut c = SignCounts { positive: 0, zero: 0, negative: 0 };
        for &x in &self.values {
            if x > self.tol {
                c.positive += 1;
            } else if x < -self.tol {
                c.negative += 1;
            } else {
                c.zero += 1;
            }
        }
        c
    }

    /// Eigenvalues classified as nonzero but lying within `10ε` of zero.
    pub fn borderline(&self) -> Vec<f64> {
        let band = BORDERLINE_FACTOR * self.tol;
        self.values
            .iter()
            .copied()
            .filter(|x| x.abs() > self.tol && x.abs() <= band)
            .collect()
    }

    /// `|Σλ − trace| ≤ ε`.
    pub fn trace_consistent(&self, trace: f64) -> bool {
        (self.sum() - trace).abs() <= self.tol.max(f64::EPSILON)
    }

    /// `|Σλ² − ‖A‖²_F| ≤ ε · max(1, ‖A‖_F)`.
    pub fn frobenius_consistent(&self, frobenius_sq: f64) -> bool {
        let slack = self.tol.max(f64::EPSILON) * frobenius_sq.sqrt().max(1.0);
        (self.sum_of_squares() - frobenius_sq).abs() <= slack
    }
}

/// Checks squareness, finiteness and symmetry (within `tol`).
#[allow(clippy::needless_range_loop)]
fn validate(matrix: &[Vec<f64>], tol: f64) -> Result<usize> {
    let n = matrix.len();
    for (i, row) in matrix.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidParameter {
                family: "matrix".into(),
                reason: format!("row {i} has {} entries, expected {n}", row.len()),
            });
        }
        if let Some(j) = row.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFinite { row: i, col: j });
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let gap = (matrix[i][j] - matrix[j][i]).abs();
            if gap > tol {
                return Err(Error::NotSymmetric { row: i, col: j, gap });
            }
        }
    }
    Ok(n)
}

/// All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
///
/// `tol` is carried into the returned [`Spectrum`] as the sign-classification
/// tolerance and also bounds the allowed asymmetry. The rotation sequence is
/// fixed, so identical inputs give bit-identical results.
#[allow(clippy::needless_range_loop)]
pub fn symmetric_eigenvalues(matrix: &[Vec<f64>], tol: f64) -> Result<Spectrum> {
    let n = validate(matrix, tol)?;
    // Work on the symmetrised copy.
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| 0.5 * (matrix[i][j] + matrix[j][i])).collect())
        .collect();

    let frob: f64 = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    let floor = (f64::EPSILON * frob).powi(2);

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off <= floor {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r][p];
                    let arq = a[r][q];
                    let new_rp = arp - s * (arq + tau * arp);
                    let new_rq = arq + s * (arp - tau * arq);
                    a[r][p] = new_rp;
                    a[p][r] = new_rp;
                    a[r][q] = new_rq;
                    a[q][r] = new_rq;
                }
            }
        }
    }

    let mut values: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum { values, tol })
}

fn max_abs(matrix: &[Vec<f64>]) -> f64 {
    matrix.iter().flatten().fold(0.0, |m, x| m.max(x.abs()))
}

/// Eigenvalues with the default tolerance `1e-8 · n · max|entry|`.
pub fn spectrum_of(matrix: &[Vec<f64>]) -> Result<Spectrum> {
    spectrum_with_scale(matrix, SIGN_TOL_SCALE)
}

pub fn spectrum_with_scale(matrix: &[Vec<f64>], scale: f64) -> Result<Spectrum> {
    let tol = sign_tolerance(matrix.len(), max_abs(matrix), scale);
    symmetric_eigenvalues(matrix, tol)
}

/// Spectrum of an already computed path matrix.
pub fn path_matrix_spectrum(p: &PathMatrix, scale: f64) -> Spectrum {
    spectrum_with_scale(&p.to_f64_rows(), scale).expect("path matrices are symmetric and finite")
}

pub fn path_spectrum(g: &Graph) -> Spectrum {
    path_matrix_spectrum(&path_matrix(g), SIGN_TOL_SCALE)
}

pub fn path_energy(g: &Graph) -> f64 {
    path_spectrum(g).energy()
}

pub fn path_spectral_radius(g: &Graph) -> f64 {
    path_spectrum(g).radius()
}

pub fn adjacency_spectrum(g: &Graph) -> Spectrum {
    spectrum_of(&g.adjacency_matrix()).expect("adjacency matrices are symmetric and finite")
}

/// Energy of the adjacency spectrum.
pub fn graph_energy(g: &Graph) -> f64 {
    adjacency_spectrum(g).energy()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergyReport {
    pub path_energy: f64,
    pub graph_energy: f64,
    pub path_spectral_radius: f64,
    pub positive_count: usize,
    pub negative_count: usize,
    pub zero_count: usize,
}

pub fn energy_report(g: &Graph) -> EnergyReport {
    let ps = path_spectrum(g);
    let signs = ps.count_signs();
    EnergyReport {
        path_energy: ps.energy(),
        graph_energy: graph_energy(g),
        path_spectral_radius: ps.radius(),
        positive_count: signs.positive,
        negative_count: signs.negative,
        zero_count: signs.zero,
    }
}

/// Outcome of checking `PE = 2ρ` for graphs with one positive path eigenvalue.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SinglePositiveCheck {
    /// Exactly one positive path eigenvalue.
    pub holds_precondition: bool,
    /// `|PE − 2ρ| ≤ ε · max(1, PE)`; only asserted under the precondition.
    pub pe_equals_2rho: bool,
    /// The positive eigenvalue is the spectral radius; only asserted under the
    /// precondition.
    pub positive_is_radius: bool,
    pub path_energy: f64,
    pub path_spectral_radius: f64,
    pub positive_count: usize,
    /// Zero eigenvalues present (the identity then has to absorb them).
    pub zero_count: usize,
}

pub fn check_single_positive(spectrum: &Spectrum) -> SinglePositiveCheck {
    let signs = spectrum.count_signs();
    let pe = spectrum.energy();
    let rho = spectrum.radius();
    let pre = signs.positive == 1;
    let slack = spectrum.tol.max(f64::EPSILON) * pe.max(1.0);
    let top = spectrum.values.first().copied().unwrap_or(0.0);
    SinglePositiveCheck {
        holds_precondition: pre,
        pe_equals_2rho: pre && (pe - 2.0 * rho).abs() <= slack,
        positive_is_radius: pre && (top - rho).abs() <= slack,
        path_energy: pe,
        path_spectral_radius: rho,
        positive_count: signs.positive,
        zero_count: signs.zero,
    }
}

/// `PE = 2ρ` check for a connected graph.
pub fn verify_single_positive_identity(g: &Graph) -> Result<SinglePositiveCheck> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(check_single_positive(&path_spectrum(g)))
}
