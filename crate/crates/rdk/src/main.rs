use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = rdk::commands::Cli::parse();
    match rdk::commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(err.exit_code())
        }
    }
}
