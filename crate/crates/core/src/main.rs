use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = tzeta::cli::run(std::env::args());
    print!("{out}");
    ExitCode::from(code)
}
