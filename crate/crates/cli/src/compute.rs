use std::io::Write;

use clap::{Args, ValueEnum};
use pathenergy::bounds::{verify_bounds, GraphSpectra, VerifyReport};
use pathenergy::spectral::SignCounts;
use pathenergy::{emit_graph6, Graph};
use serde::Serialize;

use crate::output::OutputDocument;
use crate::source::{GraphSource, SourceEcho};
use crate::{CliError, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixFormat {
    /// Full output document.
    Json,
    /// Path matrix only, one row per line.
    Csv,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub source: GraphSource,
    #[arg(long, value_enum, default_value_t = MatrixFormat::Json)]
    pub format: MatrixFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: GraphSource,
}

#[derive(Debug, Serialize)]
struct GraphInfo {
    /// Absent for graphs beyond the short graph6 form.
    #[serde(skip_serializing_if = "Option::is_none")]
    graph6: Option<String>,
    n: usize,
    m: usize,
}

impl GraphInfo {
    fn of(g: &Graph) -> Self {
        GraphInfo { graph6: emit_graph6(g).ok(), n: g.order(), m: g.size() }
    }
}

#[derive(Debug, Serialize)]
struct ComputeResults {
    graph: GraphInfo,
    path_matrix: Vec<Vec<u32>>,
    path_spectrum: Vec<f64>,
    path_energy: f64,
    path_spectral_radius: f64,
    sign_counts: SignCounts,
    /// Eigenvalues with `|λ|` at most this are counted as zero.
    sign_tolerance: f64,
    borderline: Vec<f64>,
    adjacency_spectrum: Vec<f64>,
    graph_energy: f64,
}

#[derive(Debug, Serialize)]
struct ComputeInputs {
    #[serde(flatten)]
    source: SourceEcho,
    format: MatrixFormat,
}

pub fn run_compute(args: &ComputeArgs) -> Result<Status, CliError> {
    let g = args.source.load()?;
    let s = GraphSpectra::new(&g);
    match args.format {
        MatrixFormat::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(std::io::stdout().lock());
            for row in s.path_matrix.rows() {
                w.serialize(row).map_err(|e| CliError(e.to_string()))?;
            }
            w.flush()?;
        }
        MatrixFormat::Json => {
            let results = ComputeResults {
                graph: GraphInfo::of(&g),
                path_matrix: s.path_matrix.rows(),
                path_spectrum: s.path.values.clone(),
                path_energy: s.path.energy(),
                path_spectral_radius: s.path.radius(),
                sign_counts: s.path.count_signs(),
                sign_tolerance: s.path.tol,
                borderline: s.path.borderline(),
                adjacency_spectrum: s.adjacency.values.clone(),
                graph_energy: s.adjacency.energy(),
            };
            let inputs = ComputeInputs { source: args.source.echo(), format: args.format };
            OutputDocument::new("compute", inputs, results).print()?;
        }
    }
    Ok(Status::Ok)
}

#[derive(Debug, Serialize)]
struct VerifyResults {
    graph: GraphInfo,
    path_energy: f64,
    graph_energy: f64,
    #[serde(flatten)]
    report: VerifyReport,
    /// A bound failed, or the `PE = 2ρ` identity failed under its precondition.
    violation: bool,
}

pub fn run_verify(args: &VerifyArgs) -> Result<Status, CliError> {
    let g = args.source.load()?;
    let s = GraphSpectra::new(&g);
    let report = verify_bounds(&g, &s);
    let identity_broken = report
        .single_positive
        .as_ref()
        .is_some_and(|c| c.holds_precondition && !(c.pe_equals_2rho && c.positive_is_radius));
    let violation = !report.all_hold || identity_broken;
    let results = VerifyResults {
        graph: GraphInfo::of(&g),
        path_energy: s.path.energy(),
        graph_energy: s.adjacency.energy(),
        report,
        violation,
    };
    OutputDocument::new("verify", args.source.echo(), results).print()?;
    std::io::stdout().flush()?;
    Ok(if violation { Status::Violation } else { Status::Ok })
}
