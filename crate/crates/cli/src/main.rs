//! `credal-af`: extensions and probability bounds for credal argumentation
//! frameworks.
//!
//! Exit codes: 0 success, 1 usage error, 2 input/validation error,
//! 3 framework larger than the enumeration cap.

mod commands;
mod options;
mod render;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use options::Cli;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let config = match cli.into_config() {
        Ok(config) => config,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(1);
        }
    };
    match commands::run(&config) {
        Ok(output) => {
            print!("{}", output.stdout);
            ExitCode::from(output.code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
