//! `rppv`: command-line front end; see `rppv --help`.

use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (outcome, err) = rpp_vertex::cli::run(std::env::args_os());
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    if let Some(e) = err {
        let _ = std::io::stderr().write_all(e.as_bytes());
    }
    ExitCode::from(outcome.code as u8)
}
