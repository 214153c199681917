use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use whitehead_cli::{exit_code, run, Cli, ERROR_EXIT};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            // A closed pipe is not worth a panic.
            let _ = out.write_all(outcome.stdout.as_bytes());
            ExitCode::from(exit_code(&outcome) as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(ERROR_EXIT as u8)
        }
    }
}
