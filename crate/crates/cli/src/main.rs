use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = ratapprox_cli::run(std::env::args_os(), &mut out, &mut io::stderr());
    if out.flush().is_err() {
        return ExitCode::from(ratapprox_cli::EXIT_FAILED as u8);
    }
    ExitCode::from(code as u8)
}
