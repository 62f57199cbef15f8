use std::process::ExitCode;

use clap::Parser;
use smallcover::{print_artifacts, run, write_artifacts, Cli, CliError};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Argument errors count as parse failures.
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!("violation: {}", e.violation());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn execute(cli: &Cli) -> Result<(), CliError> {
    let artifacts = run(&cli.command)?;
    match cli.command.out_dir() {
        Some(dir) => write_artifacts(dir, &artifacts),
        None => {
            let stdout = std::io::stdout();
            print_artifacts(&mut stdout.lock(), &artifacts)
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}
