//! Command-line front end for `wellsim-core`.

// `!(x > 0.0)` is used on purpose so NaN inputs are rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod commands;
pub mod error;
pub mod timearg;

use std::io::Write;
use std::path::Path;

use wellsim_core::ExperimentResult;

pub use args::{parse_args, Format, ParseOutcome, RunConfig};
pub use error::CliError;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn render(result: &ExperimentResult, format: Format) -> String {
    match format {
        Format::Csv => result.to_csv(),
        Format::Json => result.to_json(VERSION),
    }
}

/// Writes to `path`, or to standard output when `None`.
pub fn emit(result: &ExperimentResult, format: Format, path: Option<&Path>) -> Result<(), CliError> {
    let text = render(result, format);
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

/// Parses, runs and writes; returns the process exit code.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString>,
{
    let result = parse_args(argv).and_then(|outcome| match outcome {
        ParseOutcome::Info(text) => {
            print!("{text}");
            Ok(())
        }
        ParseOutcome::Run(cfg) => {
            let result = commands::run(&cfg.command)?;
            for (k, v) in &result.summary {
                eprintln!("{k} = {}", wellsim_core::report::format_float(*v));
            }
            emit(&result, cfg.format(), cfg.output())
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("wellsim: {e}");
            e.exit_code()
        }
    }
}
