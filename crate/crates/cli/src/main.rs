use std::process::ExitCode;

use bertini::RunConfig;
use clap::Parser;

fn main() -> ExitCode {
    let config = RunConfig::parse();
    ExitCode::from(bertini::execute(&config))
}
