use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = multigrade_cli::run(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    ExitCode::from(code)
}
