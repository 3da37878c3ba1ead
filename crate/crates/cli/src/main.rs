use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dnum_cli::{commands, load_instance, CliError, Format, Fuzz, MatrixFormat};

/// Belief and plausibility measures for D numbers.
#[derive(Debug, Parser)]
#[command(name = "dnum", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bel, Pl and interval width for one subset or the whole powerset.
    Compute {
        path: PathBuf,
        /// Subset expression such as `a|c`; omit for the full table.
        #[arg(long)]
        subset: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check the four belief/plausibility theorems on every subset.
    Verify {
        path: Option<PathBuf>,
        /// Also check this many seeded random instances.
        #[arg(long)]
        fuzz: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Export the non-exclusivity matrix U with the D and Pl vectors.
    Matrix {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: MatrixFormat,
    },
}

fn run(command: Command) -> Result<(String, bool), CliError> {
    match command {
        Command::Compute { path, subset, format } => {
            let inst = load_instance(&path)?;
            Ok((commands::compute(&inst, subset.as_deref(), format)?, true))
        }
        Command::Verify { path, fuzz, seed } => {
            if path.is_none() && fuzz.is_none() {
                return Err(CliError::Parse(
                    "verify needs an instance file, --fuzz, or both".into(),
                ));
            }
            let inst = path.as_deref().map(load_instance).transpose()?;
            let fuzz = fuzz.map(|count| Fuzz { count, seed });
            let outcome = commands::verify(inst.as_ref(), fuzz)?;
            Ok((outcome.text, outcome.passed))
        }
        Command::Matrix { path, format } => {
            let inst = load_instance(&path)?;
            Ok((commands::matrix(&inst, format)?, true))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, passed)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::FAILURE;
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: theorem violation");
                ExitCode::from(CliError::THEOREM_VIOLATION as u8)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
