use std::process::ExitCode;

use clap::Parser;
use hypercode_cli::{run, CommandRequest};

fn main() -> ExitCode {
    let outcome = run(&CommandRequest::parse());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.status.code())
}
