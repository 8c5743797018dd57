use std::process::ExitCode;

fn main() -> ExitCode {
    kuroda::cli::run(std::env::args_os())
}
