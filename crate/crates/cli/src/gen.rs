use std::io::{self, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GenKind {
    /// The letter `a`, `size` times.
    Unary,
    /// Independent uniform symbols.
    Random,
    /// One random block of `period` symbols, repeated.
    Periodic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenConfig {
    pub kind: GenKind,
    pub size: usize,
    /// Symbols are `a`, `b`, ... for alphabets up to 26, raw bytes `0..k`
    /// above that.
    pub alphabet: usize,
    pub seed: u64,
    pub period: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            kind: GenKind::Random,
            size: 0,
            alphabet: 4,
            seed: 0,
            period: 16,
        }
    }
}

pub fn run_gen<W: Write>(config: &GenConfig, mut out: W) -> io::Result<()> {
    let k = config.alphabet.clamp(1, 256);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut symbol = move || {
        let s = rng.random_range(0..k);
        if k <= 26 {
            b'a' + s as u8
        } else {
            s as u8
        }
    };

    const CHUNK: usize = 1 << 16;
    let mut buf = Vec::with_capacity(CHUNK.min(config.size));
    let mut left = config.size;
    match config.kind {
        GenKind::Unary => {
            buf.resize(CHUNK.min(left), b'a');
            while left > 0 {
                let take = left.min(buf.len());
                out.write_all(&buf[..take])?;
                left -= take;
            }
        }
        GenKind::Random => {
            while left > 0 {
                buf.clear();
                buf.extend((0..left.min(CHUNK)).map(|_| symbol()));
                out.write_all(&buf)?;
                left -= buf.len();
            }
        }
        GenKind::Periodic => {
            let block: Vec<u8> = (0..config.period.max(1)).map(|_| symbol()).collect();
            while left > 0 {
                let take = left.min(block.len());
                out.write_all(&block[..take])?;
                left -= take;
            }
        }
    }
    out.flush()
}
