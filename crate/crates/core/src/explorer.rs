//! Conjecture scans over graph6 streams.
//!
//! Each graph gets a [`ScanRecord`]: sign counts of its path spectrum, block
//! structure, and verdicts for two statements:
//!
//! * one-positive: a 2-connected graph has exactly one positive path
//!   eigenvalue;
//! * block-count: the number of positive path eigenvalues equals the number of
//!   2-connected components. Whether bridges count as components is
//!   ambiguous, so agreement is reported both against all blocks and against
//!   blocks with at least three vertices, and neither reading is asserted.
//!
//! A failure of the one-positive statement is only reported as a
//! counterexample if no eigenvalue is borderline and the count survives a
//! recomputation at a ten times tighter tolerance; otherwise the graph goes on
//! the review list.

use std::collections::BTreeMap;
use std::io::{self, BufRead};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::blocks::block_decomposition;
use crate::bounds::{verify_bounds, GraphSpectra};
use crate::error::Error;
use crate::graph::Graph;
use crate::graph6::parse_graph6;
use crate::spectral::{path_matrix_spectrum, SIGN_TOL_SCALE};

/// Default order limit; each graph costs `n²/2` max-flow runs.
pub const DEFAULT_MAX_N: usize = 40;

const CHUNK: usize = 512;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanOptions {
    /// `ε = sign_tol_scale · n · max|p_ij|`.
    pub sign_tol_scale: f64,
    /// Larger graphs are skipped and counted.
    pub max_n: usize,
    /// Evaluate the path-energy inequalities for every graph.
    pub check_bounds: bool,
    /// Abort on the first unparsable line instead of recording it.
    pub strict: bool,
    /// Worker threads; 0 uses the global pool, 1 runs inline.
    pub jobs: usize,
    /// Include wall-clock statistics in the summary (breaks byte-identical
    /// output across runs).
    pub record_timing: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            sign_tol_scale: SIGN_TOL_SCALE,
            max_n: DEFAULT_MAX_N,
            check_bounds: true,
            strict: false,
            jobs: 1,
            record_timing: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRecord {
    /// 1-based input line.
    pub line: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub biconnected: bool,
    pub unicyclic: bool,
    pub girth: Option<usize>,
    pub positive_count: usize,
    pub zero_count: usize,
    pub negative_count: usize,
    pub block_count: usize,
    pub nontrivial_block_count: usize,
    pub conjecture1_applicable: bool,
    /// Vacuously true when not applicable.
    pub conjecture1_holds: bool,
    /// Confirmed failure: applicable, count ≠ 1, nothing borderline, and the
    /// count persists at the tighter tolerance.
    pub conjecture1_counterexample: bool,
    pub conjecture2_match_all_blocks: bool,
    pub conjecture2_match_nontrivial_blocks: bool,
    /// Some eigenvalue sits in the borderline band, or a failure did not
    /// survive the tighter recomputation.
    pub needs_review: bool,
    pub pe: f64,
    pub path_spectral_radius: f64,
    /// `None` when bound checks are disabled.
    pub bounds_ok: Option<bool>,
    /// Trace and Frobenius identities hold for the computed path spectrum.
    pub spectrum_consistent: bool,
}

/// Scans one graph.
pub fn scan_graph(g: &Graph, graph6: &str, line: usize, opts: &ScanOptions) -> ScanRecord {
    let spectra = GraphSpectra::with_scale(g, opts.sign_tol_scale);
    let path = &spectra.path;
    let signs = path.count_signs();
    let borderline = !path.borderline().is_empty();

    let blocks = block_decomposition(g);
    let n = g.order();
    let biconnected = n >= 3 && blocks.blocks.len() == 1 && blocks.blocks[0].len() == n;
    let applicable = biconnected;
    let holds = !applicable || signs.positive == 1;

    let mut counterexample = false;
    let mut needs_review = borderline;
    if !holds && !borderline {
        let tight = path_matrix_spectrum(&spectra.path_matrix, opts.sign_tol_scale / 10.0);
        let confirmed = tight.count_signs().positive != 1 && tight.borderline().is_empty();
        counterexample = confirmed;
        needs_review = !confirmed;
    }

    let trace_ok = path.trace_consistent(0.0);
    let frob_ok = path.frobenius_consistent(spectra.path_matrix.frobenius_sq());

    ScanRecord {
        line,
        graph6: graph6.to_string(),
        n,
        m: g.size(),
        connected: g.is_connected(),
        biconnected,
        unicyclic: g.is_unicyclic(),
        girth: g.girth(),
        positive_count: signs.positive,
        zero_count: signs.zero,
        negative_count: signs.negative,
        block_count: blocks.block_count(),
        nontrivial_block_count: blocks.nontrivial_block_count,
        conjecture1_applicable: applicable,
        conjecture1_holds: holds,
        conjecture1_counterexample: counterexample,
        conjecture2_match_all_blocks: signs.positive == blocks.block_count(),
        conjecture2_match_nontrivial_blocks: signs.positive == blocks.nontrivial_block_count,
        needs_review,
        pe: path.energy(),
        path_spectral_radius: path.radius(),
        bounds_ok: opts.check_bounds.then(|| verify_bounds(g, &spectra).all_hold),
        spectrum_consistent: trace_ok && frob_ok,
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Agreement {
    pub matches: usize,
    pub total: usize,
}

impl Agreement {
    fn add(&mut self, hit: bool) {
        self.total += 1;
        self.matches += usize::from(hit);
    }

    fn merge(&mut self, other: Agreement) {
        self.matches += other.matches;
        self.total += other.total;
    }

    pub fn rate(&self) -> Option<f64> {
        (self.total > 0).then(|| self.matches as f64 / self.total as f64)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ConjectureOneSummary {
    pub applicable: usize,
    pub holds: usize,
    pub counterexamples: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureTwoSummary {
    pub all_blocks: Agreement,
    pub nontrivial_blocks: Agreement,
}

/// Histogram of positive-eigenvalue counts.
pub type PositiveHistogram = BTreeMap<usize, usize>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Stratum {
    pub n: usize,
    pub biconnected: bool,
    pub unicyclic: bool,
    pub total: usize,
    pub positive_counts: PositiveHistogram,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlockStratum {
    pub block_count: usize,
    pub nontrivial_block_count: usize,
    pub total: usize,
    pub positive_counts: PositiveHistogram,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GirthStratum {
    pub n: usize,
    pub girth: usize,
    pub total: usize,
    pub positive_counts: PositiveHistogram,
    /// Unicyclic graphs with exactly two positive path eigenvalues.
    pub two_positive_witnesses: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LineError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Runtime {
    pub elapsed_ms: f64,
    pub graphs_per_second: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ScanSummary {
    /// Graphs scanned (one record each).
    pub total: usize,
    pub parse_errors: Vec<LineError>,
    pub oversize_skipped: usize,
    pub conjecture1: ConjectureOneSummary,
    pub conjecture2: ConjectureTwoSummary,
    pub needs_review: Vec<String>,
    pub bound_violations: Vec<String>,
    pub spectrum_inconsistent: Vec<String>,
    pub strata: Vec<Stratum>,
    pub block_strata: Vec<BlockStratum>,
    pub unicyclic_by_girth: Vec<GirthStratum>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime: Option<Runtime>,
}

type StratumKey = (usize, bool, bool);

/// Accumulates records into a [`ScanSummary`].
#[derive(Debug, Clone, Default)]
pub struct SummaryBuilder {
    total: usize,
    parse_errors: Vec<LineError>,
    oversize_skipped: usize,
    c1: ConjectureOneSummary,
    c2: ConjectureTwoSummary,
    needs_review: Vec<String>,
    bound_violations: Vec<String>,
    spectrum_inconsistent: Vec<String>,
    strata: BTreeMap<StratumKey, (usize, PositiveHistogram)>,
    block_strata: BTreeMap<(usize, usize), (usize, PositiveHistogram)>,
    girth: BTreeMap<(usize, usize), (usize, PositiveHistogram, Vec<String>)>,
}

impl SummaryBuilder {
    pub fn push(&mut self, r: &ScanRecord) {
        self.total += 1;
        if r.needs_review {
            self.needs_review.push(r.graph6.clone());
        } else {
            if r.conjecture1_applicable {
                self.c1.applicable += 1;
                if r.conjecture1_holds {
                    self.c1.holds += 1;
                }
            }
            if r.conjecture1_counterexample {
                self.c1.counterexamples.push(r.graph6.clone());
            }
            self.c2.all_blocks.add(r.conjecture2_match_all_blocks);
            self.c2.nontrivial_blocks.add(r.conjecture2_match_nontrivial_blocks);
        }
        if r.bounds_ok == Some(false) {
            self.bound_violations.push(r.graph6.clone());
        }
        if !r.spectrum_consistent {
            self.spectrum_inconsistent.push(r.graph6.clone());
        }

        let s = self.strata.entry((r.n, r.biconnected, r.unicyclic)).or_default();
        s.0 += 1;
        *s.1.entry(r.positive_count).or_default() += 1;

        let b = self
            .block_strata
            .entry((r.block_count, r.nontrivial_block_count))
            .or_default();
        b.0 += 1;
        *b.1.entry(r.positive_count).or_default() += 1;

        if let (true, Some(girth)) = (r.unicyclic, r.girth) {
            let u = self.girth.entry((r.n, girth)).or_default();
            u.0 += 1;
            *u.1.entry(r.positive_count).or_default() += 1;
            if r.positive_count == 2 {
                u.2.push(r.graph6.clone());
            }
        }
    }

    pub fn parse_error(&mut self, line: usize, message: String) {
        self.parse_errors.push(LineError { line, message });
    }

    pub fn oversize(&mut self) {
        self.oversize_skipped += 1;
    }

    /// Folds `other` in after `self`; list fields are concatenated.
    pub fn merge(&mut self, other: SummaryBuilder) {
        self.total += other.total;
        self.parse_errors.extend(other.parse_errors);
        self.oversize_skipped += other.oversize_skipped;
        self.c1.applicable += other.c1.applicable;
        self.c1.holds += other.c1.holds;
        self.c1.counterexamples.extend(other.c1.counterexamples);
        self.c2.all_blocks.merge(other.c2.all_blocks);
        self.c2.nontrivial_blocks.merge(other.c2.nontrivial_blocks);
        self.needs_review.extend(other.needs_review);
        self.bound_violations.extend(other.bound_violations);
        self.spectrum_inconsistent.extend(other.spectrum_inconsistent);
        fn merge_hist(into: &mut PositiveHistogram, from: PositiveHistogram) {
            for (k, v) in from {
                *into.entry(k).or_default() += v;
            }
        }
        for (k, (t, h)) in other.strata {
            let e = self.strata.entry(k).or_default();
            e.0 += t;
            merge_hist(&mut e.1, h);
        }
        for (k, (t, h)) in other.block_strata {
            let e = self.block_strata.entry(k).or_default();
            e.0 += t;
            merge_hist(&mut e.1, h);
        }
        for (k, (t, h, w)) in other.girth {
            let e = self.girth.entry(k).or_default();
            e.0 += t;
            merge_hist(&mut e.1, h);
            e.2.extend(w);
        }
    }

    pub fn finish(self) -> ScanSummary {
        ScanSummary {
            total: self.total,
            parse_errors: self.parse_errors,
            oversize_skipped: self.oversize_skipped,
            conjecture1: self.c1,
            conjecture2: self.c2,
            needs_review: self.needs_review,
            bound_violations: self.bound_violations,
            spectrum_inconsistent: self.spectrum_inconsistent,
            strata: self
                .strata
                .into_iter()
                .map(|((n, biconnected, unicyclic), (total, positive_counts))| Stratum {
                    n,
                    biconnected,
                    unicyclic,
                    total,
                    positive_counts,
                })
                .collect(),
            block_strata: self
                .block_strata
                .into_iter()
                .map(|((block_count, nontrivial_block_count), (total, positive_counts))| BlockStratum {
                    block_count,
                    nontrivial_block_count,
                    total,
                    positive_counts,
                })
                .collect(),
            unicyclic_by_girth: self
                .girth
                .into_iter()
                .map(|((n, girth), (total, positive_counts, two_positive_witnesses))| GirthStratum {
                    n,
                    girth,
                    total,
                    positive_counts,
                    two_positive_witnesses,
                })
                .collect(),
            runtime: None,
        }
    }
}

/// Aggregates already computed records.
pub fn stratified_report<'a, I>(records: I) -> ScanSummary
where
    I: IntoIterator<Item = &'a ScanRecord>,
{
    let mut b = SummaryBuilder::default();
    for r in records {
        b.push(r);
    }
    b.finish()
}

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("failed to read input: {0}")]
    Read(#[source] io::Error),
    #[error("failed to write record: {0}")]
    Write(#[source] io::Error),
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: Error,
    },
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

enum Outcome {
    Record(Box<ScanRecord>),
    ParseError(usize, Error),
    Oversize,
    Skip,
}

fn process_line(line_no: usize, text: &str, opts: &ScanOptions) -> Outcome {
    let body = text.trim();
    let body = body.strip_prefix(crate::graph6::HEADER).unwrap_or(body);
    if body.is_empty() {
        return Outcome::Skip;
    }
    match parse_graph6(body) {
        Err(e) => Outcome::ParseError(line_no, e),
        Ok(g) if g.order() > opts.max_n => Outcome::Oversize,
        Ok(g) => Outcome::Record(Box::new(scan_graph(&g, body, line_no, opts))),
    }
}

/// Scans a graph6 stream, handing each record to `sink` in input order, and
/// returns the aggregate summary.
pub fn scan_stream<R, F>(reader: R, opts: &ScanOptions, mut sink: F) -> Result<ScanSummary, ScanError>
where
    R: BufRead,
    F: FnMut(&ScanRecord) -> io::Result<()>,
{
    let start = Instant::now();
    let pool = match opts.jobs {
        0 | 1 => None,
        j => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| ScanError::Pool(e.to_string()))?,
        ),
    };
    let parallel = opts.jobs != 1;

    let mut builder = SummaryBuilder::default();
    let mut lines = reader.lines().enumerate();
    loop {
        let mut chunk = Vec::with_capacity(CHUNK);
        for (i, line) in lines.by_ref().take(CHUNK) {
            chunk.push((i + 1, line.map_err(ScanError::Read)?));
        }
        if chunk.is_empty() {
            break;
        }
        let work = || -> Vec<Outcome> {
            if parallel {
                chunk.par_iter().map(|(i, l)| process_line(*i, l, opts)).collect()
            } else {
                chunk.iter().map(|(i, l)| process_line(*i, l, opts)).collect()
            }
        };
        let outcomes = match &pool {
            Some(p) => p.install(work),
            None => work(),
        };
        for outcome in outcomes {
            match outcome {
                Outcome::Record(r) => {
                    sink(&r).map_err(ScanError::Write)?;
                    builder.push(&r);
                }
                Outcome::ParseError(line, source) => {
                    if opts.strict {
                        return Err(ScanError::Parse { line, source });
                    }
                    builder.parse_error(line, source.to_string());
                }
                Outcome::Oversize => builder.oversize(),
                Outcome::Skip => {}
            }
        }
    }

    let mut summary = builder.finish();
    if opts.record_timing {
        let secs = start.elapsed().as_secs_f64();
        summary.runtime = Some(Runtime {
            elapsed_ms: secs * 1e3,
            graphs_per_second: if secs > 0.0 { summary.total as f64 / secs } else { 0.0 },
        });
    }
    Ok(summary)
}

/// Convenience wrapper collecting records into a vector.
pub fn scan_to_vec<R: BufRead>(reader: R, opts: &ScanOptions) -> Result<(Vec<ScanRecord>, ScanSummary), ScanError> {
    let mut records = Vec::new();
    let summary = scan_stream(reader, opts, |r| {
        records.push(r.clone());
        Ok(())
    })?;
    Ok((records, summary))
}
