use std::io::{self, Write};
use std::time::Duration;

use maxrep::{
    build_suffix_array, LeanMaximalRepeats, MaximalRepeats, SuffixArray, SuffixIndex,
    SupermaximalRepeats, Text,
};

use crate::{Mode, RunConfig, Variant};

#[derive(Clone, Debug, PartialEq)]
pub struct PhaseTiming {
    pub phase: &'static str,
    pub seconds: f64,
    /// Repeats reported by a find phase; `None` for suffix sorting.
    pub repeats: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchReport {
    pub input_bytes: usize,
    pub phases: Vec<PhaseTiming>,
}

/// Times suffix sorting and then each requested find phase, writing one
/// `phase\tinput_bytes\tseconds` line per phase. Seconds are user CPU time
/// and exclude loading the input. Every find phase starts from its own copy
/// of the suffix array, so its time never includes suffix sorting.
pub fn run_bench<W: Write>(
    config: &RunConfig,
    modes: &[Mode],
    text: &Text,
    mut out: W,
) -> io::Result<BenchReport> {
    let n = text.len();
    let ml = config.ml();
    let mut phases = Vec::new();

    let (sa, seconds) = timed(|| build_suffix_array(text));
    phases.push(PhaseTiming {
        phase: "sa",
        seconds,
        repeats: None,
    });
    writeln!(out, "sa\t{n}\t{seconds:.3}")?;

    for &mode in modes {
        let input = sa.clone();
        let (found, seconds) = match mode {
            Mode::Maximal => timed(|| find_maximal(text, input, ml, config.variant)),
            Mode::Supermaximal => {
                timed(|| SupermaximalRepeats::from_suffix_array(text, input, ml).count())
            }
        };
        let phase = match mode {
            Mode::Maximal => "findmaxr",
            Mode::Supermaximal => "findsmaxr",
        };
        writeln!(out, "{phase}\t{n}\t{seconds:.3}")?;
        phases.push(PhaseTiming {
            phase,
            seconds,
            repeats: Some(found),
        });
    }
    out.flush()?;
    Ok(BenchReport {
        input_bytes: n,
        phases,
    })
}

fn find_maximal(text: &Text, sa: SuffixArray, ml: usize, variant: Variant) -> usize {
    match variant {
        Variant::Lean => LeanMaximalRepeats::from_suffix_array(text, sa, ml).count(),
        Variant::Standard => {
            let rank = maxrep::invert_permutation(&sa);
            let lcp = maxrep::build_lcp(text, &sa, &rank);
            let index = SuffixIndex { sa, rank, lcp };
            MaximalRepeats::with_index(text, index, ml).count()
        }
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = user_time();
    let value = f();
    let spent = user_time().saturating_sub(start);
    (value, spent.as_secs_f64())
}

#[cfg(unix)]
fn user_time() -> Duration {
    let mut usage = std::mem::MaybeUninit::<libc::rusage>::zeroed();
    // SAFETY: getrusage only writes into the struct we hand it.
    let usage = unsafe {
        libc::getrusage(libc::RUSAGE_SELF, usage.as_mut_ptr());
        usage.assume_init()
    };
    Duration::new(
        usage.ru_utime.tv_sec as u64,
        usage.ru_utime.tv_usec as u32 * 1000,
    )
}

/// Without getrusage the process clock is not available; wall time since
/// first use is the closest stand-in.
#[cfg(not(unix))]
fn user_time() -> Duration {
    use std::sync::OnceLock;
    use std::time::Instant;
    static START: OnceLock<Instant> = OnceLock::new();
    START.get_or_init(Instant::now).elapsed()
}
