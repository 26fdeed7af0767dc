//! Library half of the `evanesce` binary: argument handling, subcommands and
//! the verification suites, kept here so integration tests can drive them
//! in-process.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};

use clap::error::ErrorKind;
use clap::Parser;
use thiserror::Error;

pub mod args;
pub mod commands;
pub mod config;
pub mod suites;
pub mod table;

use args::{Cli, Command};
use commands::{Report, Sink};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] evanesce_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

fn dispatch(cmd: &Command) -> Result<(Report, Sink), CliError> {
    match cmd {
        Command::Verify(a) => commands::verify::run(a),
        Command::Modes(a) => commands::modes::run(a),
        Command::Dispersion(a) => commands::dispersion::run(a),
        Command::Propagator(a) => commands::propagator::run(a),
        Command::Decay(a) => commands::decay::run(a),
    }
}

fn emit(report: &Report, sink: &Sink, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &sink.out {
        Some(path) => {
            let f = File::create(path).map_err(|e| {
                CliError::Usage(format!("cannot write {}: {e}", path.display()))
            })?;
            let mut w = BufWriter::new(f);
            report.table.write(sink.format, &mut w)?;
            w.flush()?;
        }
        None => report.table.write(sink.format, &mut *stdout)?,
    }
    Ok(())
}

/// Parse `argv`, run the subcommand and return the process exit status.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = dispatch(&cli.command).and_then(|(report, sink)| {
        emit(&report, &sink, stdout)?;
        Ok(report)
    });
    match result {
        Ok(report) => {
            if let Some(s) = &report.summary {
                let _ = writeln!(stderr, "{s}");
            }
            if report.passed {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}
