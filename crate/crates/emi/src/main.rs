use std::process::ExitCode;

use clap::Parser;
use emi::cli::{execute, Cli};
use emi::{threads_from_env, CliError, Workers};

fn run() -> Result<String, CliError> {
    let cli = Cli::parse();
    let workers = Workers::new(threads_from_env()?)?;
    execute(&cli, &workers)
}

fn main() -> ExitCode {
    match run() {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            match &e {
                CliError::Verification(_) => print!("{e}"),
                _ => eprintln!("error: {e}"),
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
