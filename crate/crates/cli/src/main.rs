//! Command-line front end. Exit status: 0 success, 1 usage or input error,
//! 2 when the mathematical result is undefined or irrational.

mod args;
mod commands;
mod config;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::Cli;
use config::RunConfig;
use error::CliError;

fn output_path(out: PathBuf) -> PathBuf {
    match std::env::var_os("OUT_DIR") {
        Some(dir) if out.is_relative() => PathBuf::from(dir).join(out),
        _ => out,
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let mut cfg = RunConfig::load(cli.config.as_deref())?;
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    let out = commands::run(cli.command, cfg)?;
    match cli.out {
        Some(path) => std::fs::write(output_path(path), &out.body)?,
        None => print!("{}", out.body),
    }
    Ok(out.undefined)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
