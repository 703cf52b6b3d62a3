//! Batch front end for `du2-core`: spectrum tables, irrep reports, angular
//! momentum eigenbases and the verification suite.

pub mod args;
pub mod commands;
pub mod numeric;
pub mod report;

use std::path::PathBuf;

use du2_core::{FrequencyRatio, IrrepLabel};

use crate::args::{Args, Command};
pub use crate::report::Report;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] du2_core::Error),
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

pub fn build_report(command: &Command) -> Result<Report, CliError> {
    let common = command.common();
    let ratio = FrequencyRatio::new(common.ratio.0, common.ratio.1)?;
    let tol = common.tol;
    let report = match command {
        Command::Spectrum { count, .. } => commands::spectrum(ratio, *count as usize, tol),
        Command::Irrep { label, .. } => commands::irrep(ratio, IrrepLabel::new(label.level, label.p, label.q), tol)?,
        Command::Angular { label, .. } => {
            commands::angular(ratio, IrrepLabel::new(label.level, label.p, label.q), tol)?
        }
        Command::Verify { n_max, .. } => commands::verify(ratio, *n_max, tol)?,
    };
    Ok(report)
}

/// Runs one invocation and returns the process exit code.
pub fn run(args: Args) -> i32 {
    let report = match build_report(&args.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let common = args.command.common();
    let text = report.render(common.format);
    match &common.output {
        Some(path) => {
            if let Err(source) = std::fs::write(path, &text) {
                eprintln!(
                    "error: {}",
                    CliError::Io {
                        path: path.clone(),
                        source
                    }
                );
                return 2;
            }
        }
        None => print!("{text}"),
    }
    if report.passed() {
        0
    } else {
        1
    }
}
