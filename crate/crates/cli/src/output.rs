use std::io::Write;

use serde::Serialize;

/// Bumped on any breaking change to a command payload.
pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Serialize)]
pub struct OutputDocument<I, R> {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub inputs: I,
    pub results: R,
}

impl<I: Serialize, R: Serialize> OutputDocument<I, R> {
    pub fn new(command: &'static str, inputs: I, results: R) -> Self {
        OutputDocument { schema_version: SCHEMA_VERSION, command, inputs, results }
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        serde_json::to_writer_pretty(&mut w, self)?;
        writeln!(w)?;
        w.flush()
    }

    pub fn print(&self) -> std::io::Result<()> {
        self.write_to(std::io::stdout().lock())
    }
}
