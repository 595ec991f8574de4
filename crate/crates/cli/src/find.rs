use std::io::{self, Write};

use maxrep::{
    find_supermaximal_repeats, ExpandedRepeat, LeanMaximalRepeats, MaximalRepeats, RepeatReport,
    SuffixIndex, Text,
};

use crate::{Format, Mode, RunConfig, Variant};

/// Expanded records show at most this many bytes of the repeat; longer ones
/// end in `...` and the length column tells the real size.
pub const ELIDE_AFTER: usize = 256;

/// Streams one TSV record per repeat and returns how many were written.
///
/// compact: `sa_start` (1-based), `length`, `count`.
/// expanded: `length`, `count`, comma-joined 1-based positions, string.
pub fn run_find<W: Write>(config: &RunConfig, text: &Text, out: W) -> io::Result<usize> {
    let mut sink = Sink {
        out,
        text,
        config,
        written: 0,
    };
    let ml = config.ml();
    match (config.mode, config.variant) {
        (Mode::Supermaximal, _) => {
            let mut it = find_supermaximal_repeats(text, ml);
            while let Some(rep) = it.next() {
                sink.emit(&rep, || it.expand(&rep))?;
            }
        }
        (Mode::Maximal, Variant::Lean) => {
            let mut it = LeanMaximalRepeats::new(text, ml);
            while let Some(rep) = it.next() {
                sink.emit(&rep, || it.expand(&rep))?;
            }
        }
        (Mode::Maximal, Variant::Standard) => {
            let mut it = MaximalRepeats::with_index(text, SuffixIndex::build(text), ml);
            while let Some(rep) = it.next() {
                sink.emit(&rep, || it.expand(&rep))?;
            }
        }
    }
    sink.out.flush()?;
    Ok(sink.written)
}

struct Sink<'a, W> {
    out: W,
    text: &'a Text,
    config: &'a RunConfig,
    written: usize,
}

impl<W: Write> Sink<'_, W> {
    fn emit(
        &mut self,
        rep: &RepeatReport,
        expand: impl FnOnce() -> ExpandedRepeat,
    ) -> io::Result<()> {
        match self.config.format {
            Format::Compact => writeln!(
                self.out,
                "{}\t{}\t{}",
                rep.sa_start + 1,
                rep.length,
                rep.count
            )?,
            Format::Expanded => {
                let e = expand();
                write!(self.out, "{}\t{}\t", rep.length, rep.count)?;
                let limit = self.config.positions_limit.unwrap_or(usize::MAX);
                for (k, pos) in e.positions.iter().take(limit).enumerate() {
                    if k > 0 {
                        self.out.write_all(b",")?;
                    }
                    write!(self.out, "{pos}")?;
                }
                if e.positions.len() > limit {
                    self.out
                        .write_all(if limit == 0 { b"..." } else { b",..." })?;
                }
                self.out.write_all(b"\t")?;
                let shown = &self.text[e.positions[0] - 1..][..rep.length.min(ELIDE_AFTER)];
                self.out.write_all(&escape(shown))?;
                if rep.length > ELIDE_AFTER {
                    self.out.write_all(b"...")?;
                }
                self.out.write_all(b"\n")?;
            }
        }
        self.written += 1;
        Ok(())
    }
}

/// Backslash-escapes the bytes that would break a TSV record. All other
/// bytes pass through unchanged.
pub fn escape(bytes: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(bytes.len());
    for &b in bytes {
        match b {
            b'\\' => out.extend_from_slice(b"\\\\"),
            b'\t' => out.extend_from_slice(b"\\t"),
            b'\n' => out.extend_from_slice(b"\\n"),
            b'\r' => out.extend_from_slice(b"\\r"),
            _ => out.push(b),
        }
    }
    out
}
