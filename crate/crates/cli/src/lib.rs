//! Command-line driver: single points, figure sweeps and engine comparison,
//! written as CSV.

pub mod commands;
pub mod config;
pub mod format;
pub mod phase;

use std::fs::File;
use std::io::{self, Write};

use thiserror::Error;

use crate::commands::{Cell, Table};
use crate::config::{Output, RunConfig};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] mzent_core::Error),
    #[error("output: {0}")]
    Io(#[from] io::Error),
    #[error("output: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// 2 for bad arguments, parameters or output; 3 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if !e.is_domain() => 3,
            _ => 2,
        }
    }
}

/// Renders `table` as CSV with LF line endings.
pub fn write_csv<W: Write>(table: &Table, precision: usize, out: W) -> Result<(), CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(&table.header)?;
    for row in &table.rows {
        w.write_record(row.iter().map(|c| match *c {
            Cell::Real(x) => format::real(x, precision),
            Cell::Int(k) => k.to_string(),
        }))?;
    }
    w.flush()?;
    Ok(())
}

/// Runs a resolved configuration and returns the process exit code.
pub fn execute(cfg: &RunConfig) -> i32 {
    let outcome = match commands::run(cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let written = match &cfg.output {
        Output::Stdout => write_csv(&outcome.table, cfg.precision, io::stdout().lock()),
        Output::File(path) => File::create(path)
            .map_err(CliError::from)
            .and_then(|f| write_csv(&outcome.table, cfg.precision, io::BufWriter::new(f))),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return e.exit_code();
    }
    if let Some(s) = &outcome.summary {
        eprintln!("{s}");
    }
    if let Some(b) = &outcome.breach {
        eprintln!("error: {b}");
        return 3;
    }
    0
}
