use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use maxrep_cli::{
    check_memory, read_input, run_bench, run_find, run_gen, CliError, Format, GenConfig, GenKind,
    Mode, RunConfig, Variant,
};

/// Find maximal and supermaximal repeats in a text.
#[derive(Parser)]
#[command(name = "maxrep", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report repeats as TSV records on standard output.
    Find(FindArgs),
    /// Time suffix sorting and the find phases (user CPU seconds).
    Bench(BenchArgs),
    /// Write a synthetic text to standard output.
    Gen(GenArgs),
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value_t = Variant::Lean)]
    variant: Variant,
    /// Shortest repeat to report.
    #[arg(long, short = 'l', default_value_t = 1)]
    min_length: usize,
    /// Input file, or `-` for standard input.
    #[arg(default_value = "-")]
    input: PathBuf,
}

#[derive(Args)]
struct FindArgs {
    #[arg(long, value_enum, default_value_t = Mode::Maximal)]
    mode: Mode,
    #[arg(long, value_enum, default_value_t = Format::Compact)]
    format: Format,
    /// Show at most this many positions per expanded record.
    #[arg(long)]
    positions_limit: Option<usize>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct BenchArgs {
    /// Time only this find phase (default: both).
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    kind: GenKind,
    /// Output length in bytes.
    #[arg(conflicts_with = "size_flag")]
    size: Option<usize>,
    #[arg(long = "size", id = "size_flag")]
    size_flag: Option<usize>,
    #[arg(long, default_value_t = 4)]
    alphabet: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Block length for the periodic kind.
    #[arg(long, default_value_t = 16)]
    period: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Find(args) => find(args),
        Command::Bench(args) => bench(args),
        Command::Gen(args) => gen(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("maxrep: {err}");
            ExitCode::FAILURE
        }
    }
}

fn find(args: FindArgs) -> Result<(), CliError> {
    let config = RunConfig {
        mode: args.mode,
        min_length: args.common.min_length,
        variant: args.common.variant,
        format: args.format,
        input: args.common.input.into(),
        positions_limit: args.positions_limit,
    };
    let text = read_input(&config.input)?;
    check_memory(&config, text.len())?;
    let stdout = io::stdout();
    run_find(
        &config,
        &text,
        BufWriter::with_capacity(1 << 16, stdout.lock()),
    )?;
    Ok(())
}

fn bench(args: BenchArgs) -> Result<(), CliError> {
    let config = RunConfig {
        min_length: args.common.min_length,
        variant: args.common.variant,
        input: args.common.input.into(),
        ..RunConfig::default()
    };
    let modes = match args.mode {
        Some(mode) => vec![mode],
        None => vec![Mode::Maximal, Mode::Supermaximal],
    };
    let text = read_input(&config.input)?;
    check_memory(&config, text.len())?;
    let report = run_bench(&config, &modes, &text, io::stdout().lock())?;
    let mut err = io::stderr().lock();
    for phase in &report.phases {
        if let Some(found) = phase.repeats {
            writeln!(err, "{}: {found} repeats", phase.phase)?;
        }
    }
    Ok(())
}

fn gen(args: GenArgs) -> Result<(), CliError> {
    let config = GenConfig {
        kind: args.kind,
        size: args.size.or(args.size_flag).unwrap_or(0),
        alphabet: args.alphabet,
        seed: args.seed,
        period: args.period,
    };
    run_gen(&config, BufWriter::new(io::stdout().lock()))?;
    Ok(())
}
