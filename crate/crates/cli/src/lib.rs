//! Library side of the `maxrep` binary: input loading, the `find`, `bench`
//! and `gen` runs, and the TSV record formats. Everything writes to a caller
//! supplied sink so tests can capture output without spawning a process.

use std::fs::File;
use std::io::{self, Read};
use std::path::PathBuf;

use maxrep::footprint::{maximal_lean_bytes, maximal_standard_bytes, supermaximal_bytes};
use maxrep::Text;

mod bench;
mod find;
mod gen;

pub use bench::{run_bench, BenchReport, PhaseTiming};
pub use find::{escape, run_find, ELIDE_AFTER};
pub use gen::{run_gen, GenConfig, GenKind};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    #[default]
    Maximal,
    Supermaximal,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Variant {
    #[default]
    Lean,
    Standard,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Compact,
    Expanded,
}

/// Where the text comes from. `-` on the command line means standard input.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum Input {
    #[default]
    Stdin,
    Path(PathBuf),
}

impl From<PathBuf> for Input {
    fn from(path: PathBuf) -> Input {
        if path.as_os_str() == "-" {
            Input::Stdin
        } else {
            Input::Path(path)
        }
    }
}

impl std::fmt::Display for Input {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Input::Stdin => f.write_str("<stdin>"),
            Input::Path(p) => write!(f, "{}", p.display()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub mode: Mode,
    pub min_length: usize,
    /// Ignored in supermaximal mode.
    pub variant: Variant,
    pub format: Format,
    pub input: Input,
    /// Caps the position list of each expanded record; `count` is unaffected.
    pub positions_limit: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            mode: Mode::Maximal,
            min_length: 1,
            variant: Variant::Lean,
            format: Format::Compact,
            input: Input::Stdin,
            positions_limit: None,
        }
    }
}

impl RunConfig {
    /// Minimum length with `0` treated as `1`.
    pub fn ml(&self) -> usize {
        self.min_length.max(1)
    }

    /// Bytes the sweep keeps resident for an input of `n` symbols.
    pub fn footprint(&self, n: usize) -> f64 {
        match (self.mode, self.variant) {
            (Mode::Supermaximal, _) => supermaximal_bytes(n),
            (Mode::Maximal, Variant::Lean) => maximal_lean_bytes(n),
            (Mode::Maximal, Variant::Standard) => maximal_standard_bytes(n),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {input}: {source}")]
    Read { input: Input, source: io::Error },
    #[error(transparent)]
    Text(#[from] maxrep::Error),
    #[error("not enough memory: about {needed} bytes are needed for {n} input bytes")]
    Memory { needed: u64, n: usize },
    #[error("write failed: {0}")]
    Write(#[from] io::Error),
}

pub fn read_input(input: &Input) -> Result<Text, CliError> {
    let mut bytes = Vec::new();
    let res = match input {
        Input::Stdin => io::stdin().lock().read_to_end(&mut bytes),
        Input::Path(p) => File::open(p).and_then(|mut f| f.read_to_end(&mut bytes)),
    };
    res.map_err(|source| CliError::Read {
        input: input.clone(),
        source,
    })?;
    Ok(Text::new(bytes)?)
}

/// Fails early, with a sizing hint, when the sweep's arrays cannot be
/// reserved, instead of letting the allocator abort halfway through.
pub fn check_memory(config: &RunConfig, n: usize) -> Result<(), CliError> {
    let needed = config.footprint(n).ceil() as u64;
    let mut probe: Vec<u8> = Vec::new();
    match probe.try_reserve_exact(needed as usize) {
        Ok(()) => Ok(()),
        Err(_) => Err(CliError::Memory { needed, n }),
    }
}
