//! Command-line surface of `ptpartner`.
//!
//! Exit codes: 0 success, 1 `failed` verdict under `--strict`, 2 invalid
//! input, 3 numerical breakdown. Every output is written to a temporary
//! file and renamed into place.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;
pub mod svg;

use std::ffi::OsString;

use clap::Parser;

pub use config::{parse_contour, parse_map, RunConfig};
pub use error::{exit, CliError};
pub use svg::emit_svg_convergence;

/// Parses `argv` and runs the command, printing any diagnostic as one
/// line on stderr. Returns the exit code.
pub fn cli_main<I, S>(argv: I) -> u8
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::INVALID_INPUT
            } else {
                exit::OK
            };
            let _ = e.print();
            return code;
        }
    };
    match RunConfig::from_command(cli.command).and_then(|cfg| commands::execute(&cfg)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("ptpartner: {}", e.to_string().replace('\n', " "));
            e.exit_code()
        }
    }
}
