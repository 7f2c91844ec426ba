mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check(c) => commands::check(c),
        Command::Oracle { common, burnside_bound } => commands::oracle(common, *burnside_bound),
        Command::Sweep { common, range } => commands::sweep(common, range),
        Command::Verify { common, suite } => commands::verify(common, *suite),
        Command::Export(c) => commands::export(c),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
