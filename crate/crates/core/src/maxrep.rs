//! Maximal repeats in non-decreasing length order.
//!
//! LCP indices are visited by increasing LCP value (ties by increasing index).
//! The set `S` of already-seen indices lives in a [`BitTreeSet`] whose
//! elements are 1-based LCP indices plus the two border sentinels `0` and
//! `n`; an index `i` with LCP value `v` therefore sits in the suffix-array
//! interval bounded by its nearest seen neighbours, and every LCP value
//! strictly inside that interval is `>= v`.
//!
//! That interval spells a right-maximal repeat of length `v` iff neither
//! bounding neighbour carries the same value `v`. It is also left-maximal iff
//! its first and last suffixes are not preceded by the same symbol, or the
//! suffixes one position to the left do not form a block of the same width
//! in the suffix array.

use std::borrow::Borrow;
use std::ops::{Deref, Range};

use crate::bit_tree::BitTreeSet;
use crate::bits::invert_in_place;
use crate::suffix_index::{
    build_lcp, build_suffix_array, invert_permutation, InversePermutation, LcpArray, SuffixArray,
    SuffixIndex,
};
use crate::{Idx, Text};

/// Compact encoding of one repeat and all its occurrences: the suffixes
/// `r[sa_start..sa_start + count]` all begin with the same `length` symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RepeatReport {
    pub sa_start: usize,
    pub length: usize,
    pub count: usize,
}

impl RepeatReport {
    pub fn sa_range(&self) -> Range<usize> {
        self.sa_start..self.sa_start + self.count
    }
}

/// A report resolved against its text.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpandedRepeat {
    pub bytes: Vec<u8>,
    /// 1-based start positions, ascending.
    pub positions: Vec<usize>,
}

/// Resolves `report` into the repeated string and its sorted 1-based
/// positions. `sa` must be the suffix array the report was produced from.
pub fn expand_report(report: &RepeatReport, text: &[u8], sa: &[Idx]) -> ExpandedRepeat {
    let mut positions: Vec<usize> = sa[report.sa_range()]
        .iter()
        .map(|&pos| pos as usize + 1)
        .collect();
    positions.sort_unstable();
    let first = positions[0] - 1;
    ExpandedRepeat {
        bytes: text[first..first + report.length].to_vec(),
        positions,
    }
}

/// LCP indices sorted by non-decreasing LCP value, ties by increasing index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LcpOrder(Vec<Idx>);

impl LcpOrder {
    pub fn into_vec(self) -> Vec<Idx> {
        self.0
    }
}

impl Deref for LcpOrder {
    type Target = [Idx];

    fn deref(&self) -> &[Idx] {
        &self.0
    }
}

/// Visiting order plus the set `S` pre-filled with everything below `ml`.
#[derive(Clone, Debug)]
pub struct SeededOrder {
    pub order: LcpOrder,
    /// First position in `order` whose LCP value is `>= ml`.
    pub initial: usize,
    pub set: BitTreeSet,
}

/// Stable counting sort of the LCP indices by value, and the seeded set.
pub fn build_lcp_order(lcp: &LcpArray, ml: usize) -> SeededOrder {
    let ml = ml.max(1);
    let m = lcp.len();
    let mut slots = value_histogram(lcp, Vec::new());
    let initial = below(&slots, ml, m);
    let mut order = vec![0; m];
    for (i, &v) in lcp.iter().enumerate() {
        let slot = &mut slots[v as usize];
        order[*slot as usize] = i as Idx;
        *slot += 1;
    }
    let set = seeded_set(lcp, ml);
    SeededOrder {
        order: LcpOrder(order),
        initial,
        set,
    }
}

/// Exclusive prefix sums of the LCP value histogram, built in `buf`.
fn value_histogram(lcp: &[Idx], mut buf: Vec<Idx>) -> Vec<Idx> {
    let max = lcp.iter().copied().max().unwrap_or(0) as usize;
    buf.clear();
    buf.resize(max + 1, 0);
    for &v in lcp {
        buf[v as usize] += 1;
    }
    let mut sum = 0;
    for slot in buf.iter_mut() {
        let c = *slot;
        *slot = sum;
        sum += c;
    }
    buf
}

/// Number of LCP entries below `ml`, read off the prefix sums.
fn below(starts: &[Idx], ml: usize, m: usize) -> usize {
    starts.get(ml).map_or(m, |&s| s as usize)
}

/// Universe `[0, m + 1]`: element `e` in `1..=m` stands for LCP index
/// `e - 1`; `0` and `m + 1` are the border sentinels.
fn seeded_set(lcp: &[Idx], ml: usize) -> BitTreeSet {
    let m = lcp.len();
    let mut set = BitTreeSet::new(m + 2);
    set.insert(0);
    set.insert(m + 1);
    for (i, &v) in lcp.iter().enumerate() {
        if (v as usize) < ml {
            set.insert(i + 1);
        }
    }
    set
}

/// Left-maximality of the suffix-array interval `start..=end`.
#[inline]
fn left_maximal(text: &[u8], sa: &[Idx], rank: &[Idx], start: usize, end: usize) -> bool {
    let a = sa[start] as usize;
    let b = sa[end] as usize;
    a == 0
        || b == 0
        || text[a - 1] != text[b - 1]
        || rank[b - 1] as i64 - rank[a - 1] as i64 != (end - start) as i64
}

/// Nearest seen neighbours of element `e`, which is then marked seen.
#[inline]
fn enclose(set: &mut BitTreeSet, e: usize) -> (usize, usize) {
    let pred = set.max_less_than(e).expect("lower sentinel present");
    let succ = set.min_greater_than(e).expect("upper sentinel present");
    set.insert(e);
    (pred, succ)
}

/// Maximal repeats with the LCP array resident.
///
/// `I` is either an owned [`SuffixIndex`] or a borrowed one, so a single
/// index can serve several runs with different `ml`.
pub struct MaximalRepeats<'t, I = SuffixIndex> {
    text: &'t [u8],
    index: I,
    order: LcpOrder,
    set: BitTreeSet,
    next: usize,
}

impl<'t, I: Borrow<SuffixIndex>> MaximalRepeats<'t, I> {
    pub fn with_index(text: &'t [u8], index: I, ml: usize) -> Self {
        assert_eq!(
            index.borrow().len(),
            text.len(),
            "index built for another text"
        );
        let SeededOrder {
            order,
            initial,
            set,
        } = build_lcp_order(&index.borrow().lcp, ml);
        MaximalRepeats {
            text,
            index,
            order,
            set,
            next: initial,
        }
    }

    pub fn index(&self) -> &SuffixIndex {
        self.index.borrow()
    }

    pub fn expand(&self, report: &RepeatReport) -> ExpandedRepeat {
        expand_report(report, self.text, &self.index().sa)
    }
}

impl<I: Borrow<SuffixIndex>> Iterator for MaximalRepeats<'_, I> {
    type Item = RepeatReport;

    fn next(&mut self) -> Option<RepeatReport> {
        let SuffixIndex { sa, rank, lcp } = self.index.borrow();
        let m = lcp.len();
        while self.next < self.order.len() {
            let i = self.order[self.next] as usize;
            self.next += 1;
            let (pred, succ) = enclose(&mut self.set, i + 1);
            let v = lcp[i];
            let right = (pred == 0 || lcp[pred - 1] != v) && (succ == m + 1 || lcp[succ - 1] != v);
            if right && left_maximal(self.text, sa, rank, pred, succ - 1) {
                return Some(RepeatReport {
                    sa_start: pred,
                    length: v as usize,
                    count: succ - pred,
                });
            }
        }
        None
    }
}

/// Maximal repeats with only `r`, `p` and the visiting order resident.
///
/// The LCP array is consumed while building the visiting order; inside the
/// sweep the current LCP value is re-derived by extending the previous one,
/// which is sound because values are visited in non-decreasing order. The
/// right-maximality test only needs the previously visited index and value:
/// with ties visited left to right, the lower neighbour carries the same
/// value exactly when it is the index visited just before, and the upper
/// neighbour never does.
pub struct LeanMaximalRepeats<'t> {
    text: &'t [u8],
    sa: SuffixArray,
    rank: InversePermutation,
    order: LcpOrder,
    set: BitTreeSet,
    next: usize,
    last_element: Option<usize>,
    last_lcp: usize,
    cur_lcp: usize,
    comparisons: u64,
}

impl<'t> LeanMaximalRepeats<'t> {
    pub fn new(text: &'t Text, ml: usize) -> Self {
        let sa = build_suffix_array(text);
        Self::from_suffix_array(text, sa, ml)
    }

    /// Builds the sweep state from a finished suffix array.
    ///
    /// Buffer schedule: `p` feeds the LCP construction and is then released.
    /// When the LCP values span a short range (the usual case), the visiting
    /// order is scattered into a fresh array through a small histogram, the
    /// LCP array is dropped and `p` is rebuilt. Otherwise the histogram takes
    /// over `p`'s buffer, each LCP entry is overwritten in place by its slot
    /// in the stable order, that permutation is inverted in place (`n` marker
    /// bits) into the visiting order, and `p` is rebuilt in the histogram's
    /// buffer. Either way at most three `n`-word arrays plus `n / 16` words
    /// are live at once.
    pub fn from_suffix_array(text: &'t [u8], sa: SuffixArray, ml: usize) -> Self {
        let ml = ml.max(1);
        assert_eq!(sa.len(), text.len(), "suffix array built for another text");
        let rank = invert_permutation(&sa);
        let lcp = build_lcp(text, &sa, &rank);
        let m = lcp.len();
        let set = seeded_set(&lcp, ml);
        let span = lcp.iter().copied().max().map_or(0, |v| v as usize + 1);

        let (order, initial, buf) = if span <= sa.len() / 16 {
            drop(rank);
            let mut slots = value_histogram(&lcp, Vec::new());
            let initial = below(&slots, ml, m);
            let mut order = vec![0; m];
            for (i, &v) in lcp.iter().enumerate() {
                let slot = &mut slots[v as usize];
                order[*slot as usize] = i as Idx;
                *slot += 1;
            }
            drop(lcp);
            drop(slots);
            (order, initial, Vec::new())
        } else {
            let mut slots = value_histogram(&lcp, rank.into_vec());
            let initial = below(&slots, ml, m);
            let mut order = lcp.into_vec();
            for v in order.iter_mut() {
                let slot = &mut slots[*v as usize];
                *v = *slot;
                *slot += 1;
            }
            invert_in_place(&mut order);
            (order, initial, slots)
        };

        let mut rank = buf;
        rank.clear();
        rank.resize(sa.len(), 0);
        for (i, &pos) in sa.iter().enumerate() {
            rank[pos as usize] = i as Idx;
        }

        LeanMaximalRepeats {
            text,
            sa,
            rank: InversePermutation::from_vec(rank),
            order: LcpOrder(order),
            set,
            next: initial,
            last_element: None,
            last_lcp: 0,
            cur_lcp: 0,
            comparisons: 0,
        }
    }

    /// Symbol comparisons spent re-deriving LCP values so far.
    pub fn symbol_comparisons(&self) -> u64 {
        self.comparisons
    }

    pub fn suffix_array(&self) -> &SuffixArray {
        &self.sa
    }

    pub fn expand(&self, report: &RepeatReport) -> ExpandedRepeat {
        expand_report(report, self.text, &self.sa)
    }

    /// Bytes held by the resident arrays and the set, excluding the text.
    pub fn resident_bytes(&self) -> usize {
        let word = std::mem::size_of::<Idx>();
        (self.sa.len() + self.rank.len() + self.order.len()) * word + self.set.heap_bytes()
    }

    /// The visiting order is known in advance, so the suffix-array entries
    /// and text bytes of upcoming indices can be requested early; otherwise
    /// every step waits on several dependent cache misses.
    #[inline]
    fn prefetch_ahead(&self) {
        const FAR: usize = 32;
        const NEAR: usize = 16;
        if let Some(&j) = self.order.get(self.next + FAR) {
            prefetch(&self.sa, j as usize);
        }
        if let Some(&j) = self.order.get(self.next + NEAR) {
            let j = j as usize;
            let a = self.sa[j] as usize;
            let b = self.sa[j + 1] as usize;
            prefetch(self.text, a + self.cur_lcp);
            prefetch(self.text, b + self.cur_lcp);
        }
    }
}

#[inline(always)]
fn prefetch<T>(slice: &[T], at: usize) {
    #[cfg(target_arch = "x86_64")]
    if let Some(item) = slice.get(at) {
        use std::arch::x86_64::{_mm_prefetch, _MM_HINT_T0};
        #[allow(unused_unsafe)]
        // SAFETY: prefetch is a hint; the address comes from a live reference.
        unsafe {
            _mm_prefetch::<_MM_HINT_T0>(item as *const T as *const i8)
        };
    }
    #[cfg(not(target_arch = "x86_64"))]
    let _ = (slice, at);
}

impl Iterator for LeanMaximalRepeats<'_> {
    type Item = RepeatReport;

    fn next(&mut self) -> Option<RepeatReport> {
        let n = self.text.len();
        while self.next < self.order.len() {
            let i = self.order[self.next] as usize;
            self.next += 1;
            self.prefetch_ahead();

            let a = self.sa[i] as usize;
            let b = self.sa[i + 1] as usize;
            let mut cur = self.cur_lcp;
            while a + cur < n && b + cur < n {
                self.comparisons += 1;
                if self.text[a + cur] != self.text[b + cur] {
                    break;
                }
                cur += 1;
            }
            self.cur_lcp = cur;

            let e = i + 1;
            let (pred, succ) = enclose(&mut self.set, e);
            let right = pred == 0 || self.last_element != Some(pred) || self.last_lcp != cur;
            self.last_element = Some(e);
            self.last_lcp = cur;
            if right && left_maximal(self.text, &self.sa, &self.rank, pred, succ - 1) {
                return Some(RepeatReport {
                    sa_start: pred,
                    length: cur,
                    count: succ - pred,
                });
            }
        }
        None
    }
}

/// Standard variant over a freshly built index.
pub fn find_maximal_repeats(text: &Text, ml: usize) -> MaximalRepeats<'_> {
    MaximalRepeats::with_index(text, SuffixIndex::build(text), ml)
}

/// Memory-lean variant; same stream as [`find_maximal_repeats`].
pub fn find_maximal_repeats_lean(text: &Text, ml: usize) -> LeanMaximalRepeats<'_> {
    LeanMaximalRepeats::new(text, ml)
}
