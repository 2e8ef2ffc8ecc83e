use clap::Args;
use pathenergy::bounds::{closed_form_spectrum, regular_premise_holds, Eigenvalue};
use pathenergy::spectral::{path_matrix_spectrum, SIGN_TOL_SCALE};
use pathenergy::{path_matrix, Family};
use serde::Serialize;

use crate::output::OutputDocument;
use crate::{CliError, Status};

/// Closed form and numeric spectrum must agree this closely.
pub const DEVIATION_LIMIT: f64 = 1e-6;

/// Instances above this order are left out of the sweep.
pub const MAX_VERTICES: usize = 128;

#[derive(Debug, Args, Serialize)]
pub struct FamiliesArgs {
    /// Restrict to one family.
    #[arg(long)]
    pub family: Option<String>,
    /// Largest value tried for each family parameter.
    #[arg(long, default_value_t = 6)]
    pub max_params: usize,
}

#[derive(Debug, Serialize)]
struct Row {
    params: Vec<usize>,
    vertices: usize,
    closed_form_spectrum: Vec<Eigenvalue>,
    closed_form_pe: f64,
    numeric_spectrum: Vec<f64>,
    numeric_pe: f64,
    /// `None` if the spectra differ in length.
    max_deviation: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    premise: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    premise_holds: Option<bool>,
}

#[derive(Debug, Serialize)]
struct FamilyTable {
    family: Family,
    #[serde(skip_serializing_if = "Option::is_none")]
    erratum: Option<String>,
    rows: Vec<Row>,
    max_deviation: f64,
    within_limit: bool,
}

#[derive(Debug, Serialize)]
struct FamiliesResults {
    deviation_limit: f64,
    families: Vec<FamilyTable>,
    all_within_limit: bool,
}

/// Parameter tuples with every entry in `1..=max`. Families whose parameters
/// are interchangeable only get `p <= q`.
fn grid(family: Family, max: usize) -> Vec<Vec<usize>> {
    match family.arity() {
        1 => (1..=max).map(|p| vec![p]).collect(),
        _ => {
            let ordered = family == Family::Regular;
            let mut out = Vec::new();
            for a in 1..=max {
                for b in 1..=max {
                    if ordered || a <= b {
                        out.push(vec![a, b]);
                    }
                }
            }
            out
        }
    }
}

fn table(family: Family, max: usize) -> FamilyTable {
    let mut rows = Vec::new();
    let mut erratum = None;
    for params in grid(family, max) {
        let (Ok(cf), Ok(g)) = (closed_form_spectrum(family, &params), family.generate(&params)) else {
            continue;
        };
        if g.order() > MAX_VERTICES || g.order() != cf.vertices {
            continue;
        }
        let pm = path_matrix(&g);
        let numeric = path_matrix_spectrum(&pm, SIGN_TOL_SCALE);
        erratum = erratum.or(cf.erratum.clone());
        rows.push(Row {
            vertices: g.order(),
            closed_form_pe: cf.path_energy,
            numeric_pe: numeric.energy(),
            max_deviation: cf.max_deviation(&numeric),
            premise_holds: cf.premise.as_ref().map(|_| regular_premise_holds(&g, &pm)),
            premise: cf.premise,
            closed_form_spectrum: cf.spectrum,
            numeric_spectrum: numeric.values,
            params: cf.params,
        });
    }
    let worst = rows
        .iter()
        .map(|r| r.max_deviation.unwrap_or(f64::INFINITY))
        .fold(0.0_f64, f64::max);
    FamilyTable { family, erratum, rows, max_deviation: worst, within_limit: worst < DEVIATION_LIMIT }
}

pub fn run(args: &FamiliesArgs) -> Result<Status, CliError> {
    let families: Vec<Family> = match &args.family {
        Some(name) => vec![Family::from_name(name).ok_or_else(|| {
            let known: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
            CliError(format!("unknown family `{name}` (expected one of {})", known.join(", ")))
        })?],
        None => Family::ALL.to_vec(),
    };
    let tables: Vec<FamilyTable> = families.into_iter().map(|f| table(f, args.max_params)).collect();
    let all = tables.iter().all(|t| t.within_limit);
    let results = FamiliesResults { deviation_limit: DEVIATION_LIMIT, families: tables, all_within_limit: all };
    OutputDocument::new("families", args, results).print()?;
    Ok(if all { Status::Ok } else { Status::Violation })
}
