use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = dehn_workbench::cli::run(std::env::args_os());
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let _ = lock.write_all(outcome.stdout.as_bytes());
    if !outcome.stderr.is_empty() {
        eprint!("{}", outcome.stderr);
    }
    ExitCode::from(outcome.code as u8)
}
