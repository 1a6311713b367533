//! Binary entry point: hand `argv` and the standard streams to the library.

use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let mut stdout = io::stdout().lock();
    let mut stderr = io::stderr().lock();
    let code = corepath_cli::run(std::env::args(), &mut stdout, &mut stderr);
    ExitCode::from(u8::try_from(code).expect("exit codes fit in a byte"))
}
