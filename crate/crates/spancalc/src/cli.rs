//! Placeholder.

use std::process::ExitCode;

/// Command-line entry point.
pub fn run() -> ExitCode {
    ExitCode::SUCCESS
}
