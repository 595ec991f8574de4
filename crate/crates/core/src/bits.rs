//! Plain marker bitmap used by the in-place permutation routines.

pub(crate) struct MarkBits {
    words: Vec<u64>,
}

impl MarkBits {
    pub(crate) fn new(len: usize) -> MarkBits {
        MarkBits {
            words: vec![0; len.div_ceil(64)],
        }
    }

    #[inline]
    pub(crate) fn get(&self, i: usize) -> bool {
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize) {
        self.words[i >> 6] |= 1 << (i & 63);
    }
}

/// Replaces `perm` by its inverse using `perm.len()` extra bits.
///
/// Each cycle is walked once, writing `perm[perm[i]] = i` as it goes.
pub(crate) fn invert_in_place(perm: &mut [u32]) {
    let n = perm.len();
    let mut done = MarkBits::new(n);
    for start in 0..n {
        if done.get(start) {
            continue;
        }
        let mut cur = start;
        let mut next = perm[start] as usize;
        while next != start {
            let after = perm[next] as usize;
            perm[next] = cur as u32;
            done.set(next);
            cur = next;
            next = after;
        }
        perm[start] = cur as u32;
        done.set(start);
    }
}

/// Rearranges `values` so that `values[k]` becomes the old `values[index[k]]`,
/// in place, using `values.len()` extra bits. `index` must be a permutation.
pub(crate) fn gather_in_place(values: &mut [u32], index: &[u32]) {
    let n = values.len();
    debug_assert_eq!(n, index.len());
    let mut done = MarkBits::new(n);
    for start in 0..n {
        if done.get(start) {
            continue;
        }
        let first = values[start];
        let mut k = start;
        loop {
            done.set(k);
            let from = index[k] as usize;
            if from == start {
                values[k] = first;
                break;
            }
            values[k] = values[from];
            k = from;
        }
    }
}
