use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(detjets_cli::run(std::env::args()) as u8)
}
