use std::io;
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = acc_kit::cli::Cli::parse();
    match acc_kit::cli::run(cli, io::stdin().lock(), io::stdout().lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("acc-kit: {e}");
            ExitCode::FAILURE
        }
    }
}
