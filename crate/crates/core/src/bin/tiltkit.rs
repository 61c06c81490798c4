use std::io::{stderr, stdout};
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let code = tiltkit::cli::run_command(&args, &mut stdout(), &mut stderr());
    ExitCode::from(code as u8)
}
