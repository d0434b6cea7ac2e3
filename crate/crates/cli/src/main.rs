use std::io;
use std::process::ExitCode;

use clap::Parser;
use rck_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdin = io::stdin();
    let mut stdin = stdin.lock();
    let stdout = io::stdout();
    let mut stdout = stdout.lock();
    let mut stderr = io::stderr();
    ExitCode::from(run(&cli, &mut stdin, &mut stdout, &mut stderr))
}
