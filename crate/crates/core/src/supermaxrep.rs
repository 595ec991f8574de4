//! Supermaximal repeats: maximal repeats contained in no other repeat.
//!
//! A repeat is right-supermaximal iff its occurrences form a plateau of equal
//! LCP values that is a strict local maximum (out-of-range neighbours count as
//! lower). It is left-supermaximal iff the symbols preceding its occurrences
//! are pairwise distinct; an occurrence at text position 0 has no preceding
//! symbol and never collides. Only `r` and the LCP array are needed.

use crate::maxrep::{expand_report, ExpandedRepeat, RepeatReport};
use crate::suffix_index::{build_lcp_without_rank, build_suffix_array, LcpArray, SuffixArray};
use crate::Text;

/// Set of preceding symbols for the plateau under test.
///
/// Reset is `O(1)`: each entry stores the epoch that set it, and a reset just
/// advances the epoch.
#[derive(Clone, Debug)]
pub struct PrecedingSymbolSet {
    stamp: [u32; 256],
    epoch: u32,
    len: usize,
}

impl Default for PrecedingSymbolSet {
    fn default() -> Self {
        PrecedingSymbolSet {
            stamp: [0; 256],
            epoch: 1,
            len: 0,
        }
    }
}

impl PrecedingSymbolSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn clear(&mut self) {
        self.len = 0;
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp = [0; 256];
            self.epoch = 1;
        }
    }

    /// Adds `symbol`; `false` if it was already present.
    pub fn insert(&mut self, symbol: u8) -> bool {
        let slot = &mut self.stamp[symbol as usize];
        if *slot == self.epoch {
            return false;
        }
        *slot = self.epoch;
        self.len += 1;
        true
    }

    pub fn contains(&self, symbol: u8) -> bool {
        self.stamp[symbol as usize] == self.epoch
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }
}

/// Single left-to-right pass over the LCP array.
pub struct SupermaximalRepeats<'t> {
    text: &'t [u8],
    sa: SuffixArray,
    lcp: LcpArray,
    ml: usize,
    /// Next LCP index to inspect.
    pos: usize,
    /// Start of the current plateau while it still qualifies, i.e. it rose
    /// above its left neighbour (or starts the array) and has not dropped.
    up: Option<usize>,
    symbols: PrecedingSymbolSet,
    operations: u64,
}

impl<'t> SupermaximalRepeats<'t> {
    pub fn new(text: &'t Text, ml: usize) -> Self {
        Self::from_suffix_array(text, build_suffix_array(text), ml)
    }

    /// The LCP array is built without the inverse permutation, so only two
    /// `n`-word arrays are ever resident together.
    pub fn from_suffix_array(text: &'t [u8], sa: SuffixArray, ml: usize) -> Self {
        assert_eq!(sa.len(), text.len(), "suffix array built for another text");
        let lcp = build_lcp_without_rank(text, &sa);
        SupermaximalRepeats {
            text,
            sa,
            lcp,
            ml: ml.max(1),
            pos: 0,
            up: Some(0),
            symbols: PrecedingSymbolSet::new(),
            operations: 0,
        }
    }

    /// Loop steps plus symbol-set insertions performed so far.
    pub fn operations(&self) -> u64 {
        self.operations
    }

    pub fn suffix_array(&self) -> &SuffixArray {
        &self.sa
    }

    pub fn expand(&self, report: &RepeatReport) -> ExpandedRepeat {
        expand_report(report, self.text, &self.sa)
    }

    pub fn resident_bytes(&self) -> usize {
        (self.sa.len() + self.lcp.len()) * std::mem::size_of::<crate::Idx>()
            + std::mem::size_of::<PrecedingSymbolSet>()
    }

    /// Checks the plateau `up..=last` (a strict local maximum) and reports it
    /// if long enough and left-supermaximal.
    fn plateau(&mut self, up: usize, last: usize) -> Option<RepeatReport> {
        let length = self.lcp[up] as usize;
        if length < self.ml {
            return None;
        }
        self.symbols.clear();
        for j in up..=last + 1 {
            let pos = self.sa[j] as usize;
            if pos == 0 {
                continue;
            }
            self.operations += 1;
            if !self.symbols.insert(self.text[pos - 1]) {
                return None;
            }
        }
        Some(RepeatReport {
            sa_start: up,
            length,
            count: last - up + 2,
        })
    }
}

impl Iterator for SupermaximalRepeats<'_> {
    type Item = RepeatReport;

    fn next(&mut self) -> Option<RepeatReport> {
        let m = self.lcp.len();
        while self.pos <= m {
            let i = self.pos;
            self.pos += 1;
            self.operations += 1;
            if i == 0 {
                continue;
            }
            // Past the end the neighbour counts as lower than anything.
            let prev = self.lcp[i - 1];
            if i < m && self.lcp[i] > prev {
                self.up = Some(i);
            } else if i == m || self.lcp[i] != prev {
                if let Some(up) = self.up.take() {
                    if let Some(report) = self.plateau(up, i - 1) {
                        return Some(report);
                    }
                }
            }
        }
        None
    }
}

pub fn find_supermaximal_repeats(text: &Text, ml: usize) -> SupermaximalRepeats<'_> {
    SupermaximalRepeats::new(text, ml)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expanded(s: &str, ml: usize) -> Vec<(String, Vec<usize>)> {
        let t = Text::from(s);
        let mut it = find_supermaximal_repeats(&t, ml);
        let mut out = vec![];
        while let Some(rep) = it.next() {
            let e = it.expand(&rep);
            out.push((String::from_utf8(e.bytes).unwrap(), e.positions));
        }
        out.sort();
        out
    }

    #[test]
    fn worked_example() {
        assert_eq!(
            expanded("abcdeabcdfbcde", 1),
            vec![
                ("abcd".to_string(), vec![1, 6]),
                ("bcde".to_string(), vec![2, 11]),
            ]
        );
    }

    #[test]
    fn small_examples() {
        assert!(expanded("abcd", 1).is_empty());
        assert_eq!(expanded("banana", 1), vec![("ana".to_string(), vec![2, 4])]);
        assert_eq!(expanded("aaaa", 1), vec![("aaa".to_string(), vec![1, 2])]);
        assert!(expanded("", 1).is_empty());
        assert!(expanded("x", 1).is_empty());
        assert_eq!(expanded("xx", 1), vec![("x".to_string(), vec![1, 2])]);
        assert!(expanded("banana", 4).is_empty());
    }

    #[test]
    fn descending_staircase() {
        // lcp = [3, 1, 1, 0]-like shapes must not report the stale plateau.
        assert_eq!(
            expanded("abcabcab", 1),
            vec![("abcab".to_string(), vec![1, 4])]
        );
    }

    #[test]
    fn plateau_at_array_start() {
        // lcp = [2, 0, ...]: first plateau only has a right neighbour.
        assert_eq!(expanded("abxab", 1), vec![("ab".to_string(), vec![1, 4])]);
    }

    #[test]
    fn symbol_set_reset() {
        let mut s = PrecedingSymbolSet::new();
        assert!(s.insert(b'a'));
        assert!(!s.insert(b'a'));
        assert!(s.insert(b'b'));
        assert_eq!(s.len(), 2);
        s.clear();
        assert!(s.is_empty());
        assert!(!s.contains(b'a'));
        assert!(s.insert(b'a'));
        assert_eq!(s.len(), 1);
    }
}
