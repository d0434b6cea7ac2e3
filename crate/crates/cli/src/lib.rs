//! Library side of the `rck` binary: argument types, graph ingestion, the
//! subcommands and their report records.
//!
//! Records are written in input order whatever the worker count, and carry
//! no timing unless `--timing` is given, so equal inputs give byte-identical
//! output.

pub mod args;
mod commands;
mod input;
mod record;
mod scan;

use std::fs::File;
use std::io::{self, BufRead, BufWriter, Write};

use rck_core::{Error, GraphError};

pub use args::{Cli, Command};
pub use record::Record;
pub use scan::{OrderSummary, ScanSummary};

/// Exit status: every assertion held.
pub const EXIT_OK: u8 = 0;
/// A checked theorem or structural property failed on some input.
pub const EXIT_ASSERTION: u8 = 1;
/// Bad arguments, unreadable or malformed input.
pub const EXIT_INPUT: u8 = 2;
/// A node limit was reached before some search closed.
pub const EXIT_INDETERMINATE: u8 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("input line {line}: {source}")]
    Parse { line: usize, source: GraphError },
    #[error(transparent)]
    Core(#[from] Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
}

/// Output format.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

/// Settings shared by every subcommand.
pub(crate) struct Context {
    pub pool: rayon::ThreadPool,
    pub format: Format,
    pub timing: bool,
}

/// What a batch of records found, folded into the exit status.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Status {
    pub assertion_failed: bool,
    pub indeterminate: bool,
}

impl Status {
    fn merge(&mut self, other: Status) {
        self.assertion_failed |= other.assertion_failed;
        self.indeterminate |= other.indeterminate;
    }

    fn code(self) -> u8 {
        if self.assertion_failed {
            EXIT_ASSERTION
        } else if self.indeterminate {
            EXIT_INDETERMINATE
        } else {
            EXIT_OK
        }
    }
}

/// Runs a parsed command line. `stdin` is read only when no other input is
/// named; the report goes to `--out` if given, else to `stdout`. Errors are
/// described on `stderr`. Returns the process exit status.
pub fn run(cli: &Cli, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    let workers = cli
        .workers
        .map(usize::from)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(stderr, "rck: cannot start {workers} workers: {e}");
            return EXIT_INPUT;
        }
    };
    let ctx = Context {
        pool,
        format: if cli.text { Format::Text } else { Format::Json },
        timing: cli.timing,
    };
    let result = match &cli.out {
        Some(path) => File::create(path).map_err(CliError::from).and_then(|file| {
            let mut file = BufWriter::new(file);
            let status = commands::dispatch(cli, &ctx, stdin, &mut file)?;
            file.flush()?;
            Ok(status)
        }),
        None => commands::dispatch(cli, &ctx, stdin, stdout),
    };
    match result {
        Ok(status) => status.code(),
        Err(e) => {
            let _ = writeln!(stderr, "rck: {e}");
            EXIT_INPUT
        }
    }
}
