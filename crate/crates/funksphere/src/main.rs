use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = funksphere::cli::run_from(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(outcome.stdout.as_bytes());
    if !outcome.stderr.is_empty() {
        eprint!("{}", outcome.stderr);
    }
    ExitCode::from(outcome.code)
}
