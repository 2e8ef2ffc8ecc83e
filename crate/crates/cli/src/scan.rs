use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use pathenergy::explorer::{scan_stream, ScanError, ScanOptions, ScanRecord, DEFAULT_MAX_N};
use pathenergy::spectral::SIGN_TOL_SCALE;
use serde::Serialize;

use crate::output::OutputDocument;
use crate::{CliError, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RecordFormat {
    /// One JSON object per line.
    Jsonl,
    /// CSV with a header row.
    Csv,
}

#[derive(Debug, Args, Serialize)]
pub struct ScanArgs {
    /// graph6 input, one graph per line; `-` reads standard input.
    #[arg(long)]
    pub input: String,
    /// Record destination; standard output when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Summary destination; standard error when omitted.
    #[arg(long)]
    pub summary: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = RecordFormat::Jsonl)]
    pub format: RecordFormat,
    /// Worker threads; 0 uses every core, 1 runs single-threaded.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Abort with exit code 2 on the first unparsable line.
    #[arg(long)]
    pub strict: bool,
    /// Skip (and count) graphs with more vertices than this.
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,
    /// Zero tolerance scale: `ε = scale · n · max|p_ij|`.
    #[arg(long, default_value_t = SIGN_TOL_SCALE)]
    pub tol_scale: f64,
    /// Skip the bound checks.
    #[arg(long)]
    pub no_bounds: bool,
    /// Exit with code 3 when a counterexample to the one-positive conjecture is found.
    #[arg(long)]
    pub fail_on_counterexample: bool,
    /// Add wall-clock statistics to the summary.
    #[arg(long)]
    pub timings: bool,
}

fn open_input(source: &str) -> Result<Box<dyn BufRead>, CliError> {
    if source == "-" {
        return Ok(Box::new(io::stdin().lock()));
    }
    let f = File::open(source).map_err(|e| CliError(format!("{source}: {e}")))?;
    Ok(Box::new(BufReader::new(f)))
}

fn open_output(path: Option<&PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| CliError(format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

enum Sink {
    Jsonl(Box<dyn Write>),
    Csv(Box<csv::Writer<Box<dyn Write>>>),
}

impl Sink {
    fn write(&mut self, r: &ScanRecord) -> io::Result<()> {
        match self {
            Sink::Jsonl(w) => {
                serde_json::to_writer(&mut *w, r)?;
                w.write_all(b"\n")
            }
            Sink::Csv(w) => w.serialize(r).map_err(io::Error::other),
        }
    }

    fn finish(self) -> io::Result<()> {
        match self {
            Sink::Jsonl(mut w) => w.flush(),
            Sink::Csv(mut w) => w.flush(),
        }
    }
}

pub fn run(args: &ScanArgs) -> Result<Status, CliError> {
    if !(args.tol_scale.is_finite() && args.tol_scale > 0.0) {
        return Err(CliError("--tol-scale must be positive".into()));
    }
    let opts = ScanOptions {
        sign_tol_scale: args.tol_scale,
        max_n: args.max_n,
        check_bounds: !args.no_bounds,
        strict: args.strict,
        jobs: args.jobs,
        record_timing: args.timings,
    };
    let input = open_input(&args.input)?;
    let out = open_output(args.output.as_ref())?;
    let mut sink = match args.format {
        RecordFormat::Jsonl => Sink::Jsonl(out),
        RecordFormat::Csv => Sink::Csv(Box::new(csv::Writer::from_writer(out))),
    };
    let summary = scan_stream(input, &opts, |r| sink.write(r)).map_err(|e| match e {
        ScanError::Parse { line, source } => CliError(format!("line {line}: {source}")),
        other => CliError(other.to_string()),
    })?;
    sink.finish()?;

    let status = if args.fail_on_counterexample && !summary.conjecture1.counterexamples.is_empty() {
        Status::Counterexample
    } else if !summary.bound_violations.is_empty() || !summary.spectrum_inconsistent.is_empty() {
        Status::Violation
    } else {
        Status::Ok
    };
    let doc = OutputDocument::new("scan", args, summary);
    match &args.summary {
        Some(p) => {
            let f = File::create(p).map_err(|e| CliError(format!("{}: {e}", p.display())))?;
            doc.write_to(BufWriter::new(f))?;
        }
        None => doc.write_to(io::stderr().lock())?,
    }
    Ok(status)
}
