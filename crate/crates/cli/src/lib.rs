//! The `krzyz` command line: parse, run one engine operation, emit a report.

pub mod commands;
pub mod emit;
pub mod report;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;

pub use commands::{execute, Cli, Command};
pub use emit::{emit, EmitError, Format};
pub use report::{Payload, Report};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED_VERDICT: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Returns the exit code with the text for stdout and stderr.
pub fn run<I, T>(args: I) -> (u8, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    (EXIT_OK, text, String::new())
                }
                _ => (EXIT_USAGE, String::new(), text),
            };
        }
    };
    let report = match execute(&cli.command) {
        Ok(r) => r,
        Err(e) => return (EXIT_USAGE, String::new(), format!("error: {e}\n")),
    };
    match emit(&report, cli.command.format()) {
        Ok(out) => {
            let code = match report.payload.verdict() {
                Some(false) => EXIT_FAILED_VERDICT,
                _ => EXIT_OK,
            };
            (code, out, String::new())
        }
        Err(e) => (EXIT_USAGE, String::new(), format!("error: {e}\n")),
    }
}
