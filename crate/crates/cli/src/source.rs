use std::fs;
use std::path::PathBuf;

use clap::{ArgGroup, Args};
use pathenergy::generators::by_name;
use pathenergy::{parse_graph6, Graph};
use serde::Serialize;

use crate::CliError;

#[derive(Debug, Clone, Args)]
#[group(skip)]
#[command(group(ArgGroup::new("source").required(true).args(["graph6", "file", "family"])))]
pub struct GraphSource {
    /// Graph in graph6 format.
    #[arg(long)]
    pub graph6: Option<String>,
    /// File whose first line is a graph6 string.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Named family (see `families`), plus cycle, path, tree-path and star.
    #[arg(long, requires = "params")]
    pub family: Option<String>,
    /// Family parameters, comma separated: `p` or `p,q`.
    #[arg(long, value_delimiter = ',', requires = "family")]
    pub params: Vec<usize>,
}

/// Echo of the graph source for the output document.
#[derive(Debug, Clone, Serialize)]
pub struct SourceEcho {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<usize>,
}

impl GraphSource {
    pub fn echo(&self) -> SourceEcho {
        SourceEcho {
            graph6: self.graph6.clone(),
            file: self.file.as_ref().map(|p| p.display().to_string()),
            family: self.family.clone(),
            params: self.params.clone(),
        }
    }

    pub fn load(&self) -> Result<Graph, CliError> {
        if let Some(s) = &self.graph6 {
            return Ok(parse_graph6(s)?);
        }
        if let Some(path) = &self.file {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError(format!("{}: {e}", path.display())))?;
            let first = text.lines().next().unwrap_or("");
            return Ok(parse_graph6(first)?);
        }
        match &self.family {
            Some(name) => Ok(by_name(name, &self.params)?),
            None => Err(CliError("no graph source given".into())),
        }
    }
}
