mod args;
mod commands;
mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use serde::Serialize;

use args::{Cli, Command};
use commands::CliResult;
use report::Rendered;

fn emit<T: Serialize>(rendered: CliResult<Rendered<T>>, cli: &Cli) -> CliResult<()> {
    let rendered = rendered?;
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    rendered.write(cli.format, &mut out)?;
    out.flush()?;
    Ok(())
}

fn run(cli: &Cli) -> CliResult<()> {
    match &cli.command {
        Command::Corrections(a) => emit(commands::corrections(a), cli),
        Command::Table1(a) => emit(commands::table1(a), cli),
        Command::Table2(a) => emit(commands::table2(a), cli),
        Command::Numerov(a) => emit(commands::numerov(a), cli),
        Command::ExactSwave(a) => emit(commands::exact_swave(a), cli),
        Command::CriticalLambda(a) => emit(commands::critical(a), cli),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
