use std::process::ExitCode;

use clap::Parser;
use mhl::cli::{input_error_report, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(outcome) => {
            if cli.json {
                println!("{}", outcome.report.to_json());
            } else {
                print!("{}", outcome.text);
            }
            outcome.exit_code()
        }
        Err(e) => {
            if cli.json {
                println!("{}", input_error_report(&cli, &e).to_json());
            }
            eprintln!("error: {e}");
            2
        }
    };
    ExitCode::from(code as u8)
}
