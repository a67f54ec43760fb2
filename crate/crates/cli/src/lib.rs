//! Command-line front end: seed intake, orchestration of the exact checks,
//! and canonical JSON / text reports.

pub mod config;
pub mod error;
pub mod report;
pub mod run;
pub mod seed;

pub use config::{Command, Format, RunConfig};
pub use error::CliError;
pub use report::Report;
pub use run::{run, Outcome};

use std::io::Write;

/// Runs, renders and writes the report; returns the process exit code.
pub fn execute(config: &RunConfig) -> u8 {
    let outcome = match run(config) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let rendered = match config.format {
        Format::Json => outcome.report.render_json(),
        Format::Text => outcome.report.render_text(),
    };
    let written = match &config.output {
        Some(path) => std::fs::write(path, rendered),
        None => std::io::stdout().lock().write_all(rendered.as_bytes()),
    };
    if let Err(e) = written {
        let e = CliError::from(e);
        eprintln!("error: {e}");
        return e.exit_code();
    }
    outcome.exit_code
}
