mod budget;
mod commands;
mod input;
mod output;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::input::InputMissing;
use crate::output::{Format, Out, UsageError};

/// Exit status for bad flags and arguments.
const EXIT_USAGE: u8 = 64;
/// Exit status for inputs that do not parse.
const EXIT_DATA: u8 = 65;
/// Exit status for inputs that cannot be read.
const EXIT_NO_INPUT: u8 = 66;

/// Small graphs of given girth and chromatic number: verification,
/// constructions, LCF searches, bounds and exhaustive generation.
///
/// Exit status: 0 confirmed, 1 refuted, 2 indeterminate (budget exhausted),
/// 64 usage error, 65 unparsable input, 66 unreadable input.
#[derive(Debug, Parser)]
#[command(name = "girthcolor", version)]
struct Cli {
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a graph against expected properties.
    Verify(verify::VerifyArgs),
    /// Print a colouring as `vertex colour` lines.
    Color(commands::ColorArgs),
    /// Rewrite a graph in another format.
    Convert(commands::ConvertArgs),
    /// Lower and upper bounds on the smallest order of a k-chromatic graph of girth g.
    Bounds(commands::BoundsArgs),
    /// Build a graph from another.
    #[command(subcommand)]
    Construct(commands::Construct),
    /// Search over construction parameters.
    #[command(subcommand)]
    Search(commands::Search),
    /// Realize and search LCF tables.
    #[command(subcommand)]
    Lcf(commands::Lcf),
    /// Generate all graphs with the given girth and degree constraints.
    Enumerate(commands::EnumerateArgs),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(EXIT_USAGE);
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().expect("global pool is configured once");
    }
    let out = Out { format: cli.format };
    let result = match &cli.command {
        Command::Verify(args) => verify::run(args, out),
        Command::Color(args) => commands::color(args, out),
        Command::Convert(args) => commands::convert(args),
        Command::Bounds(args) => commands::bounds(args, out),
        Command::Construct(cmd) => commands::construct(cmd),
        Command::Search(cmd) => commands::search(cmd, out),
        Command::Lcf(cmd) => commands::lcf(cmd, out),
        Command::Enumerate(args) => commands::enumerate(args, out),
    };
    match result {
        Ok(outcome) => ExitCode::from(outcome.code()),
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = if e.is::<UsageError>() {
                EXIT_USAGE
            } else if e.is::<InputMissing>() {
                EXIT_NO_INPUT
            } else {
                EXIT_DATA
            };
            ExitCode::from(code)
        }
    }
}
