use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use scrollext_cli::{parse_input, run, Command, FieldSpec, RunError, Settings};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Cmd {
    Validate,
    Ideal,
    Decompose,
    Hilbert,
    Color,
    Reduce,
    Oracle,
}

/// Binomial extensions of Stanley-Reisner ideals.
#[derive(Parser, Debug)]
#[command(name = "scrollext", version)]
struct Args {
    command: Cmd,
    /// Input document (TOML).
    #[arg(long)]
    input: PathBuf,
    /// Write the TOML report here; a summary goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// A prime, or "rational".
    #[arg(long)]
    field: Option<String>,
    /// lex, deglex or degrevlex.
    #[arg(long)]
    order: Option<String>,
    #[arg(long)]
    rho_max: Option<u32>,
    #[arg(long)]
    seed: Option<u64>,
    /// Cross-check every fast path against Groebner-basis recomputation.
    #[arg(long)]
    oracle: bool,
    /// Include wall-clock time in the report.
    #[arg(long)]
    timing: bool,
}

fn command(c: Cmd) -> Command {
    match c {
        Cmd::Validate => Command::Validate,
        Cmd::Ideal => Command::Ideal,
        Cmd::Decompose => Command::Decompose,
        Cmd::Hilbert => Command::Hilbert,
        Cmd::Color => Command::Color,
        Cmd::Reduce => Command::Reduce,
        Cmd::Oracle => Command::Oracle,
    }
}

fn execute(args: &Args) -> Result<bool, RunError> {
    let doc = parse_input(&args.input)?;
    let settings = Settings {
        field: args.field.as_deref().map(FieldSpec::parse).transpose()?,
        order: args.order.clone(),
        rho_max: args.rho_max,
        seed: args.seed,
        oracle: args.oracle,
        timing: args.timing,
    };
    let report = run(command(args.command), &doc, &settings)?;
    match &args.out {
        Some(path) => {
            std::fs::write(path, report.to_toml())
                .map_err(|e| RunError::Internal(format!("cannot write {}: {e}", path.display())))?;
            println!("{}", report.summary());
        }
        None => print!("{}", report.to_toml()),
    }
    Ok(report.verdict)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let outcome = std::panic::catch_unwind(|| execute(&args));
    match outcome {
        Ok(Ok(true)) => ExitCode::SUCCESS,
        Ok(Ok(false)) => ExitCode::from(1),
        Ok(Err(e)) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
        Err(_) => ExitCode::from(3),
    }
}
