mod args;
mod commands;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use commands::CliError;

const EXIT_INVALID: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.common.threads {
        if t == 0 || rayon::ThreadPoolBuilder::new().num_threads(t).build_global().is_err() {
            eprintln!("error: cannot start {t} worker threads");
            return ExitCode::from(EXIT_INVALID);
        }
    }
    let outcome = match commands::run(&cli.command, cli.common.seed) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                CliError::Core(metawhit::Error::ResourceLimit { .. }) => EXIT_RESOURCE,
                _ => EXIT_INVALID,
            };
            return ExitCode::from(code);
        }
    };
    let command = serde_json::to_value(&cli.command).expect("config serializes");
    let doc = render::document(&cli.common, &command, cli.command.name(), &outcome);
    let text = render::render(cli.common.format, &doc, &outcome);
    let written = match &cli.common.out {
        Some(path) => std::fs::write(path, text.as_bytes()),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_INVALID);
    }
    if outcome.mismatch {
        return ExitCode::from(EXIT_MISMATCH);
    }
    ExitCode::SUCCESS
}
