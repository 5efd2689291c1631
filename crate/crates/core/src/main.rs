use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use irslab::cli::{configure_workers, execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_workers().and_then(|()| execute(cli));
    match result {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            let _ = std::io::stdout().flush();
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("irslab: {e}");
            ExitCode::from(2)
        }
    }
}
