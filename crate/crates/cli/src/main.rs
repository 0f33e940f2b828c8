mod args;
mod commands;
mod output;

use std::io::{self, BufWriter, ErrorKind};
use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use output::{Failure, Out};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out::new(cli.format, BufWriter::new(io::stdout()));
    let result = commands::run(cli, &mut out).and_then(|()| out.flush());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("richwords: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
