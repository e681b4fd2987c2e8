use std::process::ExitCode;

use clap::Parser;
use oddhole_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            ExitCode::from(outcome.status)
        }
        Err(failure) => {
            eprintln!("oddhole: {}", failure.message);
            ExitCode::from(failure.status)
        }
    }
}
