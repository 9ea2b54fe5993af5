mod cli;
mod render;
mod run;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use crate::run::Failure;

/// Exit codes: 0 all good, 1 an identity failed, 2 usage error, 3 runtime error.
fn main() -> ExitCode {
    let args = cli::Cli::parse();
    match run::run(args) {
        Ok(out) => {
            print!("{}", out.text);
            let _ = std::io::stdout().flush();
            if out.all_hold {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
