use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(ptpartner_cli::cli_main(std::env::args_os()))
}
