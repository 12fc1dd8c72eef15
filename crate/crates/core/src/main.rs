use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = catdet::cli::run(std::env::args_os());
    print!("{}", out.stdout);
    let _ = std::io::stdout().flush();
    eprint!("{}", out.stderr);
    ExitCode::from(out.exit_code as u8)
}
