use std::process::ExitCode;

fn main() -> ExitCode {
    spancalc::cli::run()
}
