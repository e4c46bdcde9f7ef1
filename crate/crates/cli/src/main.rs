mod args;
mod commands;
mod report;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use report::CliError;

fn init_threads(threads: Option<usize>) -> Result<(), CliError> {
    let Some(n) = threads else { return Ok(()) };
    if n == 0 {
        return Err(CliError::Param("--threads must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Param(format!("cannot start {n} worker threads: {e}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match init_threads(cli.threads).and_then(|()| commands::run(&cli.command)) {
        Ok(report) => {
            print!("{}", report.render(cli.json));
            if let Some(note) = &report.note {
                eprintln!("{note}");
            }
            ExitCode::from(report.code)
        }
        Err(e) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&e.to_json()).expect("JSON values serialise"));
            }
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
