//! Maximal and supermaximal repeat finding over suffix arrays.
//!
//! The pipeline is the same for every mode: build the suffix array `r` of the
//! input, derive its inverse permutation `p` and the LCP array, then sweep.
//!
//! * [`maxrep`] visits LCP indices in non-decreasing LCP order and uses a
//!   [`BitTreeSet`] to find, for each index, the widest enclosing interval of
//!   the suffix array whose inner LCP values are not smaller. Two variants are
//!   provided: [`MaximalRepeats`] keeps the LCP array resident, while
//!   [`LeanMaximalRepeats`] drops it and recomputes the needed values on the fly
//!   so that only `r`, `p` and the visiting order stay resident.
//! * [`supermaxrep`] scans the LCP array once for local-maximum plateaus and
//!   keeps those whose occurrences have pairwise-distinct preceding symbols.
//!
//! Every repeat is reported as a [`RepeatReport`] triple (suffix-array start,
//! length, count), so the whole output is `O(n)` integers. [`expand_report`]
//! turns a triple back into the repeated string and its positions.
//!
//! ```
//! use maxrep::{find_maximal_repeats, Text};
//!
//! let text = Text::from("abcdeabcdfbcde");
//! let found: Vec<_> = find_maximal_repeats(&text, 1)
//!     .map(|rep| (rep.length, rep.count))
//!     .collect();
//! assert_eq!(found, vec![(3, 3), (4, 2), (4, 2)]);
//! ```
//!
//! Indices are 0-based internally. Anything meant for people (the CLI, and
//! [`ExpandedRepeat::positions`]) is 1-based.

pub mod bit_tree;
mod bits;
pub mod footprint;
pub mod maxrep;
pub mod oracle;
mod qsufsort;
pub mod suffix_index;
pub mod supermaxrep;
mod text;

pub use bit_tree::BitTreeSet;
pub use maxrep::{
    build_lcp_order, expand_report, find_maximal_repeats, find_maximal_repeats_lean,
    ExpandedRepeat, LcpOrder, LeanMaximalRepeats, MaximalRepeats, RepeatReport, SeededOrder,
};
pub use suffix_index::{
    build_lcp, build_lcp_without_rank, build_suffix_array, invert_permutation, InversePermutation,
    LcpArray, SuffixArray, SuffixIndex,
};
pub use supermaxrep::{find_supermaximal_repeats, PrecedingSymbolSet, SupermaximalRepeats};
pub use text::{Text, MAX_TEXT_LEN};

/// Index type stored in every `n`-length array.
///
/// 32-bit indices keep the resident footprint at 13.25 bytes per input symbol
/// for the lean maximal run and 9.25 for the supermaximal run.
pub type Idx = u32;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("input of {len} bytes exceeds the {max}-byte limit of 32-bit indexing")]
    TextTooLarge { len: usize, max: usize },
    #[error("brute-force oracle refuses inputs longer than {max} bytes (got {len})")]
    OracleInputTooLarge { len: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
