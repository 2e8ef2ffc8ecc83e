//! Closed-form path spectra for graph families, and checkers for the
//! path-energy inequalities.
//!
//! Every checker returns [`BoundReport`]s carrying both sides of the
//! inequality so callers can inspect slack as well as the verdict.

use serde::{Deserialize, Serialize};

use crate::disjoint_paths::{path_matrix, PathMatrix};
use crate::error::{Error, Result};
use crate::generators::Family;
use crate::graph::Graph;
use crate::spectral::{adjacency_spectrum, check_single_positive, path_matrix_spectrum, SinglePositiveCheck, Spectrum, SIGN_TOL_SCALE};

/// Relative slack allowed by every bound comparison: `ε = 1e-6 · max(1, rhs)`.
pub const BOUND_REL_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Eigenvalue {
    pub value: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedForm {
    pub family: Family,
    pub params: Vec<usize>,
    pub vertices: usize,
    /// Distinct eigenvalues, largest first; zero multiplicities are dropped.
    pub spectrum: Vec<Eigenvalue>,
    pub path_energy: f64,
    /// Assumption the formula rests on, if any.
    pub premise: Option<String>,
    /// Correction relative to the commonly quoted form, if any.
    pub erratum: Option<String>,
}

impl ClosedForm {
    fn new(family: Family, params: &[usize], vertices: usize, parts: &[(f64, usize)]) -> Self {
        let mut spectrum: Vec<Eigenvalue> = parts
            .iter()
            .filter(|&&(_, m)| m > 0)
            .map(|&(value, multiplicity)| Eigenvalue { value, multiplicity })
            .collect();
        spectrum.sort_by(|a, b| b.value.total_cmp(&a.value));
        let path_energy = spectrum.iter().map(|e| e.value.abs() * e.multiplicity as f64).sum();
        let cf = ClosedForm {
            family,
            params: params.to_vec(),
            vertices,
            spectrum,
            path_energy,
            premise: None,
            erratum: None,
        };
        debug_assert_eq!(cf.multiplicity_total(), vertices);
        cf
    }

    pub fn multiplicity_total(&self) -> usize {
        self.spectrum.iter().map(|e| e.multiplicity).sum()
    }

    /// Σ λ · mult.
    pub fn trace(&self) -> f64 {
        self.spectrum.iter().map(|e| e.value * e.multiplicity as f64).sum()
    }

    /// Eigenvalues with multiplicity, descending.
    pub fn expanded(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self
            .spectrum
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.value, e.multiplicity))
            .collect();
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }

    /// Largest per-eigenvalue gap against a numerically computed spectrum;
    /// `None` when the lengths differ.
    pub fn max_deviation(&self, numeric: &Spectrum) -> Option<f64> {
        let closed = self.expanded();
        (closed.len() == numeric.len()).then(|| {
            closed
                .iter()
                .zip(&numeric.values)
                .fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()))
        })
    }
}

fn invalid(family: Family, reason: &str) -> Error {
    Error::InvalidParameter {
        family: family.name().to_string(),
        reason: reason.to_string(),
    }
}

/// `{r(k−1) ×1, −r ×(k−1)}`: the spectrum of `r(J − I)`.
fn uniform(family: Family, params: &[usize], r: usize, k: usize) -> ClosedForm {
    let (r, kf) = (r as f64, k as f64);
    ClosedForm::new(family, params, k, &[(r * (kf - 1.0), 1), (-r, k - 1)])
}

const REGULAR_PREMISE: &str =
    "assumes every off-diagonal path-matrix entry equals r (vertex connectivity r)";

/// Closed-form path spectrum for a family instance.
///
/// `complete_bipartite` and `line_of_complete_bipartite` parameters are
/// normalised to `p <= q` first.
pub fn closed_form_spectrum(family: Family, params: &[usize]) -> Result<ClosedForm> {
    if params.len() != family.arity() {
        return Err(invalid(family, "wrong number of parameters"));
    }
    let need = |ok: bool, reason: &str| if ok { Ok(()) } else { Err(invalid(family, reason)) };
    let cf = match family {
        Family::Complete => {
            let p = params[0];
            need(p >= 1, "p >= 1")?;
            uniform(family, params, p - 1, p)
        }
        Family::Regular => {
            let (r, k) = (params[0], params[1]);
            need(k >= 1 && r < k, "0 <= r < k")?;
            let mut cf = uniform(family, params, r, k);
            cf.premise = Some(REGULAR_PREMISE.to_string());
            cf
        }
        Family::Tree => {
            let p = params[0];
            need(p >= 1, "p >= 1")?;
            uniform(family, params, 1, p)
        }
        Family::CompleteBipartite => {
            need(params[0] >= 1 && params[1] >= 1, "p, q >= 1")?;
            let (p, q) = (params[0].min(params[1]), params[0].max(params[1]));
            let (pf, qf) = (p as f64, q as f64);
            let centre = pf * (qf - 1.0) + qf * (pf - 1.0);
            let root = ((pf - qf).powi(2) + 4.0 * pf.powi(3) * qf).sqrt();
            ClosedForm::new(
                family,
                &[p, q],
                p + q,
                &[
                    ((centre + root) / 2.0, 1),
                    ((centre - root) / 2.0, 1),
                    (-qf, p - 1),
                    (-pf, q - 1),
                ],
            )
        }
        Family::Hypercube => {
            let d = params[0];
            need((1..=30).contains(&d), "1 <= d <= 30")?;
            let mut cf = uniform(family, params, d, 1 << d);
            cf.erratum = Some(
                "the negative eigenvalue is -d with multiplicity 2^d - 1; the commonly \
                 quoted -1 gives a nonzero trace for d >= 2"
                    .to_string(),
            );
            cf
        }
        Family::HypercubeProduct => {
            let (p, q) = (params[0], params[1]);
            need(p >= 1 && q >= 1 && p + q <= 30, "p, q >= 1 and p + q <= 30")?;
            uniform(family, params, p + q, 1 << (p + q))
        }
        Family::Wheel => {
            let p = params[0];
            need(p >= 4, "p >= 4")?;
            uniform(family, params, 3, p)
        }
        Family::LineOfComplete => {
            let p = params[0];
            need(p >= 2, "p >= 2")?;
            uniform(family, params, 2 * (p - 2), p * (p - 1) / 2)
        }
        Family::LineOfCompleteBipartite => {
            need(params[0] >= 1 && params[1] >= 1, "p, q >= 1")?;
            let (p, q) = (params[0].min(params[1]), params[0].max(params[1]));
            uniform(family, &[p, q], p + q - 2, p * q)
        }
        Family::Prism => {
            let p = params[0];
            need(p >= 3, "p >= 3")?;
            uniform(family, params, 3, 2 * p)
        }
        Family::Antiprism => {
            let p = params[0];
            need(p >= 3, "p >= 3")?;
            uniform(family, params, 4, 2 * p)
        }
    };
    Ok(cf)
}

/// Checks the premise of the regular-graph closed form on a concrete graph:
/// `g` is `r`-regular and every off-diagonal path-matrix entry equals `r`.
pub fn regular_premise_holds(g: &Graph, pm: &PathMatrix) -> bool {
    match g.is_regular() {
        Some(r) => pm.off_diagonal_all(r as u32),
        None => false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundId {
    /// Σ_{j≠i} p_ij ≤ (p−1)·d(v_i)
    RowSum,
    /// max|β| ≤ (p−1)·Δ
    AbsEigMaxDegree,
    /// PE ≤ 2(p−1)·m
    PeEdges,
    /// PE ≤ p(p−1)·Δ
    PeDegree,
    /// E ≤ (p/2)·PE ≤ p²(p−1)Δ/2
    EnergyRelation,
    /// 2(p−1) ≤ PE
    PeLower,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound_id: BoundId,
    /// Vertex for `row_sum`; link of the chain (0 or 1) for `energy_relation`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub holds: bool,
    /// `|slack| ≤ ε`.
    pub tight: bool,
}

impl BoundReport {
    pub fn new(bound_id: BoundId, index: Option<usize>, lhs: f64, rhs: f64) -> Self {
        let slack = rhs - lhs;
        let eps = BOUND_REL_TOL * rhs.abs().max(1.0);
        BoundReport {
            bound_id,
            index,
            lhs,
            rhs,
            slack,
            holds: slack >= -eps,
            tight: slack.abs() <= eps,
        }
    }
}

/// Path matrix and both spectra of one graph, computed once and shared by all
/// checkers.
#[derive(Debug, Clone)]
pub struct GraphSpectra {
    pub path_matrix: PathMatrix,
    pub path: Spectrum,
    pub adjacency: Spectrum,
}

impl GraphSpectra {
    pub fn new(g: &Graph) -> Self {
        Self::with_scale(g, SIGN_TOL_SCALE)
    }

    pub fn with_scale(g: &Graph, scale: f64) -> Self {
        let pm = path_matrix(g);
        let path = path_matrix_spectrum(&pm, scale);
        GraphSpectra {
            path_matrix: pm,
            path,
            adjacency: adjacency_spectrum(g),
        }
    }
}

fn need_order(g: &Graph, min: usize) -> Result<()> {
    if g.order() >= min {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            family: "bound".into(),
            reason: format!("needs at least {min} vertices, got {}", g.order()),
        })
    }
}

fn need_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

pub fn row_sum_reports(g: &Graph, s: &GraphSpectra) -> Vec<BoundReport> {
    let p = g.order() as f64;
    (0..g.order())
        .map(|i| {
            let lhs = s.path_matrix.row_sum(i) as f64;
            BoundReport::new(BoundId::RowSum, Some(i), lhs, (p - 1.0) * g.degree(i) as f64)
        })
        .collect()
}

pub fn eigenvalue_report(g: &Graph, s: &GraphSpectra) -> BoundReport {
    let p = g.order() as f64;
    BoundReport::new(BoundId::AbsEigMaxDegree, None, s.path.radius(), (p - 1.0) * g.max_degree() as f64)
}

pub fn pe_edge_report(g: &Graph, s: &GraphSpectra) -> BoundReport {
    let p = g.order() as f64;
    BoundReport::new(BoundId::PeEdges, None, s.path.energy(), 2.0 * (p - 1.0) * g.size() as f64)
}

pub fn pe_degree_report(g: &Graph, s: &GraphSpectra) -> BoundReport {
    let p = g.order() as f64;
    BoundReport::new(BoundId::PeDegree, None, s.path.energy(), p * (p - 1.0) * g.max_degree() as f64)
}

pub fn energy_relation_reports(g: &Graph, s: &GraphSpectra) -> [BoundReport; 2] {
    let p = g.order() as f64;
    let middle = p / 2.0 * s.path.energy();
    [
        BoundReport::new(BoundId::EnergyRelation, Some(0), s.adjacency.energy(), middle),
        BoundReport::new(
            BoundId::EnergyRelation,
            Some(1),
            middle,
            p * p * (p - 1.0) * g.max_degree() as f64 / 2.0,
        ),
    ]
}

pub fn pe_lower_report(g: &Graph, s: &GraphSpectra) -> BoundReport {
    let p = g.order() as f64;
    BoundReport::new(BoundId::PeLower, None, 2.0 * (p - 1.0), s.path.energy())
}

/// Per-vertex row-sum bound.
pub fn check_row_sum_bound(g: &Graph) -> Result<Vec<BoundReport>> {
    need_order(g, 2)?;
    Ok(row_sum_reports(g, &GraphSpectra::new(g)))
}

/// Spectral radius against `(p−1)Δ`.
pub fn check_eigenvalue_bound(g: &Graph) -> Result<BoundReport> {
    need_order(g, 2)?;
    Ok(eigenvalue_report(g, &GraphSpectra::new(g)))
}

pub fn check_pe_edge_bound(g: &Graph) -> Result<BoundReport> {
    need_order(g, 2)?;
    Ok(pe_edge_report(g, &GraphSpectra::new(g)))
}

pub fn check_pe_degree_bound(g: &Graph) -> Result<BoundReport> {
    need_order(g, 2)?;
    Ok(pe_degree_report(g, &GraphSpectra::new(g)))
}

/// Both links of `E ≤ (p/2)·PE ≤ p²(p−1)Δ/2`. Connected graphs only.
pub fn check_energy_relation(g: &Graph) -> Result<[BoundReport; 2]> {
    need_order(g, 2)?;
    need_connected(g)?;
    Ok(energy_relation_reports(g, &GraphSpectra::new(g)))
}

/// `2(p−1) ≤ PE`. Connected graphs only.
pub fn check_pe_lower_bound(g: &Graph) -> Result<BoundReport> {
    need_connected(g)?;
    Ok(pe_lower_report(g, &GraphSpectra::new(g)))
}

/// Every applicable bound for one graph plus the single-positive identity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub reports: Vec<BoundReport>,
    /// Bounds skipped because their preconditions fail (too few vertices or
    /// disconnected).
    pub skipped: Vec<BoundId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub single_positive: Option<SinglePositiveCheck>,
    pub all_hold: bool,
}

impl VerifyReport {
    pub fn violations(&self) -> impl Iterator<Item = &BoundReport> {
        self.reports.iter().filter(|r| !r.holds)
    }

    pub fn tight(&self, id: BoundId) -> bool {
        let mut it = self.reports.iter().filter(|r| r.bound_id == id).peekable();
        it.peek().is_some() && it.all(|r| r.tight)
    }
}

/// Runs every bound whose preconditions `g` meets.
pub fn verify_bounds(g: &Graph, s: &GraphSpectra) -> VerifyReport {
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    let big_enough = g.order() >= 2;
    let connected = g.is_connected();
    if big_enough {
        reports.extend(row_sum_reports(g, s));
        reports.push(eigenvalue_report(g, s));
        reports.push(pe_edge_report(g, s));
        reports.push(pe_degree_report(g, s));
    } else {
        skipped.extend([BoundId::RowSum, BoundId::AbsEigMaxDegree, BoundId::PeEdges, BoundId::PeDegree]);
    }
    if big_enough && connected {
        reports.extend(energy_relation_reports(g, s));
    } else {
        skipped.push(BoundId::EnergyRelation);
    }
    if connected {
        reports.push(pe_lower_report(g, s));
    } else {
        skipped.push(BoundId::PeLower);
    }
    let all_hold = reports.iter().all(|r| r.holds);
    VerifyReport {
        reports,
        skipped,
        single_positive: connected.then(|| check_single_positive(&s.path)),
        all_hold,
    }
}
