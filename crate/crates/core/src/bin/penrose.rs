use std::io::Write;
use std::process::ExitCode;

use penrose_core::interface::run_command;

fn main() -> ExitCode {
    let dir = std::env::current_dir().expect("working directory");
    let out = run_command(std::env::args_os(), &dir);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code as u8)
}
