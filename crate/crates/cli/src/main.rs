use std::io;
use std::process::ExitCode;

use clap::Parser;
use soembed_cli::{exit_code, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli, &mut io::stdout().lock(), &mut io::stderr().lock());
    if let Err(e) = &result {
        eprintln!("error: {e}");
    }
    ExitCode::from(exit_code(&result))
}
