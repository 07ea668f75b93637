use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use crossed_order::ramification::Choices;
use crossed_order::shell::{self, exit_code, CommandOutput};

#[derive(Parser)]
#[command(name = "crossed-order", version, about = "Heredity and maximality of crossed product orders")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Cross-check against the brute-force oracles.
    #[arg(long, global = true)]
    oracle: bool,
    /// Generator overrides, e.g. `sigma0=a^3,zeta=3`.
    #[arg(long, global = true, value_name = "CHOICES")]
    seed_choices: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check a scenario file against the scenario invariants.
    Validate { path: PathBuf },
    /// Decide heredity and maximality and count the maximal orders.
    Analyze { path: PathBuf },
    /// Run every scenario of a census specification.
    Census { path: PathBuf },
    /// Reduce a global scenario to its local component.
    Reduce {
        path: PathBuf,
        /// Also write the local scenario file here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let choices = match cli.seed_choices.as_deref().map(Choices::parse).transpose() {
        Ok(c) => c.unwrap_or_default(),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e) as u8);
        }
    };
    let out: CommandOutput = match &cli.command {
        Command::Validate { path } => shell::cmd_validate(path, cli.json),
        Command::Analyze { path } => shell::cmd_analyze(path, cli.oracle, cli.json, &choices),
        Command::Census { path } => shell::cmd_census(path, cli.json),
        Command::Reduce { path, output } => shell::cmd_reduce(path, cli.json, &choices, output.as_deref()),
    };
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code as u8)
}
