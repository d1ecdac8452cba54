use std::process::ExitCode;

use clap::Parser;
use jacobi_gmd::cli::{execute, Cli, EXIT_INVALID_INPUT, EXIT_OK};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = execute(&cli);
    let text = &outcome.output;
    if outcome.code == EXIT_INVALID_INPUT {
        eprint!("{text}");
    } else if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, text) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_INVALID_INPUT as u8);
        }
    } else {
        print!("{text}");
    }
    if outcome.code == EXIT_OK {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(outcome.code as u8)
    }
}
