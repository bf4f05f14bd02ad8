use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(textcover_cli::run(std::env::args()) as u8)
}
