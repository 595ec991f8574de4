//! Suffix array, its inverse, and the LCP array of adjacent suffixes.
//!
//! No terminator is appended to the text: a suffix that is a proper prefix of
//! another sorts first. `lcp[i]` is the longest common prefix of the suffixes
//! at `r[i]` and `r[i + 1]`, so the LCP array has `n - 1` entries (none for
//! `n <= 1`).

use std::ops::Deref;

use crate::bits::gather_in_place;
use crate::qsufsort::suffix_sort;
use crate::{Idx, Text};

macro_rules! index_array {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Clone, Debug, Default, PartialEq, Eq)]
        pub struct $name(Vec<Idx>);

        impl $name {
            /// Wraps an existing array without checking its invariants.
            pub fn from_vec(v: Vec<Idx>) -> $name {
                $name(v)
            }

            pub fn into_vec(self) -> Vec<Idx> {
                self.0
            }
        }

        impl Deref for $name {
            type Target = [Idx];

            fn deref(&self) -> &[Idx] {
                &self.0
            }
        }
    };
}

index_array!(
    /// `r`: text positions in lexicographic order of their suffixes.
    SuffixArray
);
index_array!(
    /// `p`: lexicographic rank of each text position, `p[r[i]] == i`.
    InversePermutation
);
index_array!(
    /// Common-prefix lengths of lexicographically adjacent suffixes.
    LcpArray
);

/// Sorts the suffixes of `text` by prefix doubling in `O(n log n)` time.
pub fn build_suffix_array(text: &Text) -> SuffixArray {
    SuffixArray(suffix_sort(text))
}

pub fn invert_permutation(r: &SuffixArray) -> InversePermutation {
    let mut p = vec![0; r.len()];
    for (i, &pos) in r.iter().enumerate() {
        p[pos as usize] = i as Idx;
    }
    InversePermutation(p)
}

/// Kasai et al.: visit suffixes in text order, carrying the common-prefix
/// length down by at most one per step. `O(n)` symbol comparisons.
pub fn build_lcp(text: &[u8], r: &SuffixArray, p: &InversePermutation) -> LcpArray {
    let n = text.len();
    debug_assert_eq!(r.len(), n);
    debug_assert_eq!(p.len(), n);
    if n <= 1 {
        return LcpArray(Vec::new());
    }
    let mut lcp = vec![0; n - 1];
    let mut h = 0usize;
    for i in 0..n {
        let rank = p[i] as usize;
        if rank == 0 {
            h = 0;
            continue;
        }
        let j = r[rank - 1] as usize;
        while i + h < n && j + h < n && text[i + h] == text[j + h] {
            h += 1;
        }
        lcp[rank - 1] = h as Idx;
        h = h.saturating_sub(1);
    }
    LcpArray(lcp)
}

/// Same result as [`build_lcp`] without materializing the inverse
/// permutation: one `n`-word buffer first holds each position's
/// lexicographic predecessor, is overwritten in text order with the
/// permuted LCP, and is finally rearranged into suffix-array order in place
/// with `n` marker bits.
pub fn build_lcp_without_rank(text: &[u8], r: &SuffixArray) -> LcpArray {
    const NONE: Idx = Idx::MAX;
    let n = text.len();
    debug_assert_eq!(r.len(), n);
    if n <= 1 {
        return LcpArray(Vec::new());
    }
    let mut buf = vec![0; n];
    buf[r[0] as usize] = NONE;
    for w in r.windows(2) {
        buf[w[1] as usize] = w[0];
    }
    let mut h = 0usize;
    for i in 0..n {
        let prev = buf[i];
        if prev == NONE {
            h = 0;
            buf[i] = 0;
            continue;
        }
        let j = prev as usize;
        while i + h < n && j + h < n && text[i + h] == text[j + h] {
            h += 1;
        }
        buf[i] = h as Idx;
        h = h.saturating_sub(1);
    }
    // buf[k] := lcp of r[k] with r[k - 1]; slot 0 is always 0.
    gather_in_place(&mut buf, r);
    buf.remove(0);
    LcpArray(buf)
}

/// The three core arrays over one text.
#[derive(Clone, Debug)]
pub struct SuffixIndex {
    pub sa: SuffixArray,
    pub rank: InversePermutation,
    pub lcp: LcpArray,
}

impl SuffixIndex {
    pub fn build(text: &Text) -> SuffixIndex {
        let sa = build_suffix_array(text);
        let rank = invert_permutation(&sa);
        let lcp = build_lcp(text, &sa, &rank);
        SuffixIndex { sa, rank, lcp }
    }

    pub fn len(&self) -> usize {
        self.sa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sa.is_empty()
    }
}
