use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use rdet::cli::{run, Cli};

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Some(out)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("rdet: error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
