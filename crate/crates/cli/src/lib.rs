//! Library side of the `approx` binary, exposed so tests can drive the
//! commands without spawning a process.

pub mod args;
pub mod commands;
pub mod error;
pub mod fmt;
pub mod output;

use clap::Parser;

use args::{Cli, Command};
use error::{CliError, CliResult};

/// Parse `argv`, run the selected command, and return the exit code.
/// Help and version requests print and exit 0.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(warnings) => {
            for w in &warnings {
                eprintln!("warning: {w}");
            }
            if warnings.is_empty() {
                0
            } else {
                2
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Returns warnings that should turn a completed run into a data-error exit.
fn dispatch(cli: Cli) -> CliResult<Vec<String>> {
    match cli.command {
        None => {
            let cfg = cli.run.validate()?;
            let bytes = commands::run(&cfg)?;
            output::emit(cfg.output.as_deref(), &bytes)?;
            Ok(Vec::new())
        }
        Some(Command::Rotate(a)) => {
            let (input, m, angles, out) = a.validate()?;
            let bytes = commands::rotate(&input, m, &angles)?;
            output::emit(out.as_deref(), &bytes)?;
            Ok(Vec::new())
        }
        Some(Command::Bench(a)) => {
            if !a.fixtures.is_dir() {
                return Err(CliError::Data(format!(
                    "{}: not a directory",
                    a.fixtures.display()
                )));
            }
            let outcome = commands::bench(&a.fixtures, a.table);
            let text = commands::bench_csv(a.table, &outcome)?;
            output::emit(a.output.as_deref(), text.as_bytes())?;
            Ok(outcome.warnings)
        }
    }
}
