use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use specladder::args::Cli;

fn main() -> ExitCode {
    let out = specladder::run(Cli::parse());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code)
}
