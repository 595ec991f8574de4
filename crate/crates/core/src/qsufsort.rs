//! Larsson-Sadakane prefix-doubling suffix sorting.
//!
//! Two signed arrays of `n + 1` slots: `sa` holds suffixes in their current
//! partial order, `group` holds each suffix's group number (the index of the
//! last slot of its group in `sa`). A run of already-sorted slots in `sa` is
//! marked by its negated length at the run start. Each pass ternary-splits
//! every unsorted group by the group number `h` symbols ahead, then doubles
//! `h`. Slot `n` is a virtual terminator smaller than every byte, so no
//! sentinel ever enters the caller's text.

use std::cmp::Ordering;

struct Sorter {
    sa: Vec<i32>,
    group: Vec<i32>,
    h: usize,
}

pub(crate) fn suffix_sort(text: &[u8]) -> Vec<u32> {
    let n = text.len();
    if n == 0 {
        return Vec::new();
    }
    assert!(
        n <= crate::MAX_TEXT_LEN,
        "text too large for 32-bit indices"
    );
    let len = n + 1;
    let symbol = |i: usize| if i == n { 0 } else { text[i] as usize + 1 };

    let mut count = [0usize; 257];
    for i in 0..len {
        count[symbol(i)] += 1;
    }
    let mut start = [0usize; 257];
    let mut sum = 0;
    for (s, c) in start.iter_mut().zip(count.iter()) {
        *s = sum;
        sum += c;
    }

    let mut sa = vec![0i32; len];
    let mut group = vec![0i32; len];
    let mut fill = start;
    for (i, g) in group.iter_mut().enumerate() {
        let c = symbol(i);
        *g = (start[c] + count[c] - 1) as i32;
        sa[fill[c]] = i as i32;
        fill[c] += 1;
    }
    for c in 0..257 {
        if count[c] == 1 {
            sa[start[c]] = -1;
        }
    }

    let mut sorter = Sorter { sa, group, h: 1 };
    sorter.run();

    let Sorter { mut sa, group, .. } = sorter;
    for (i, &g) in group.iter().enumerate() {
        sa[g as usize] = i as i32;
    }
    drop(group);
    debug_assert_eq!(sa[0] as usize, n);
    sa.remove(0);
    sa.into_iter().map(|x| x as u32).collect()
}

impl Sorter {
    fn run(&mut self) {
        let len = self.sa.len();
        let whole = -(len as i64);
        while (self.sa[0] as i64) > whole {
            let mut pi = 0usize;
            // Negated length of the sorted run ending just before `pi`.
            let mut run = 0usize;
            while pi < len {
                let s = self.sa[pi];
                if s < 0 {
                    pi += (-s) as usize;
                    run += (-s) as usize;
                } else {
                    if run != 0 {
                        self.sa[pi - run] = -(run as i32);
                        run = 0;
                    }
                    let end = self.group[s as usize] as usize + 1;
                    self.sort_split(pi, end - pi);
                    pi = end;
                }
            }
            if run != 0 {
                self.sa[pi - run] = -(run as i32);
            }
            self.h *= 2;
        }
    }

    #[inline]
    fn key(&self, at: usize) -> i32 {
        self.group[self.sa[at] as usize + self.h]
    }

    /// Assigns group number `last` to slots `first..=last`; a singleton is
    /// marked sorted.
    fn update_group(&mut self, first: usize, last: usize) {
        let g = last as i32;
        for at in first..=last {
            self.group[self.sa[at] as usize] = g;
        }
        if first == last {
            self.sa[first] = -1;
        }
    }

    fn select_sort_split(&mut self, p: usize, n: usize) {
        let mut pa = p;
        let pn = p + n - 1;
        while pa < pn {
            let mut pb = pa + 1;
            let mut f = self.key(pa);
            for pi in pa + 1..=pn {
                let v = self.key(pi);
                match v.cmp(&f) {
                    Ordering::Less => {
                        f = v;
                        self.sa.swap(pi, pa);
                        pb = pa + 1;
                    }
                    Ordering::Equal => {
                        self.sa.swap(pi, pb);
                        pb += 1;
                    }
                    Ordering::Greater => {}
                }
            }
            self.update_group(pa, pb - 1);
            pa = pb;
        }
        if pa == pn {
            self.group[self.sa[pa] as usize] = pa as i32;
            self.sa[pa] = -1;
        }
    }

    fn med3(&self, a: usize, b: usize, c: usize) -> usize {
        let (ka, kb, kc) = (self.key(a), self.key(b), self.key(c));
        if ka < kb {
            if kb < kc {
                b
            } else if ka < kc {
                c
            } else {
                a
            }
        } else if kb > kc {
            b
        } else if ka > kc {
            c
        } else {
            a
        }
    }

    fn choose_pivot(&self, p: usize, n: usize) -> i32 {
        let mut pm = p + n / 2;
        if n > 7 {
            let mut pl = p;
            let mut pn = p + n - 1;
            if n > 40 {
                let s = n / 8;
                pl = self.med3(pl, pl + s, pl + 2 * s);
                pm = self.med3(pm - s, pm, pm + s);
                pn = self.med3(pn - 2 * s, pn - s, pn);
            }
            pm = self.med3(pl, pm, pn);
        }
        self.key(pm)
    }

    fn vec_swap(&mut self, mut a: usize, mut b: usize, count: usize) {
        for _ in 0..count {
            self.sa.swap(a, b);
            a += 1;
            b += 1;
        }
    }

    /// Ternary split of the unsorted group occupying `p..p + n`.
    fn sort_split(&mut self, mut p: usize, mut n: usize) {
        loop {
            if n < 7 {
                self.select_sort_split(p, n);
                return;
            }
            let v = self.choose_pivot(p, n);
            // Signed cursors: `pc`/`pd` may step one slot below `p`.
            let (mut pa, mut pb) = (p as isize, p as isize);
            let (mut pc, mut pd) = ((p + n - 1) as isize, (p + n - 1) as isize);
            loop {
                while pb <= pc {
                    let f = self.key(pb as usize);
                    if f > v {
                        break;
                    }
                    if f == v {
                        self.sa.swap(pa as usize, pb as usize);
                        pa += 1;
                    }
                    pb += 1;
                }
                while pc >= pb {
                    let f = self.key(pc as usize);
                    if f < v {
                        break;
                    }
                    if f == v {
                        self.sa.swap(pc as usize, pd as usize);
                        pd -= 1;
                    }
                    pc -= 1;
                }
                if pb > pc {
                    break;
                }
                self.sa.swap(pb as usize, pc as usize);
                pb += 1;
                pc -= 1;
            }

            let pn = (p + n) as isize;
            let s = (pa - p as isize).min(pb - pa);
            self.vec_swap(p, (pb - s) as usize, s as usize);
            let s = (pd - pc).min(pn - pd - 1);
            self.vec_swap(pb as usize, (pn - s) as usize, s as usize);

            let less = (pb - pa) as usize;
            let greater = (pd - pc) as usize;
            if less > 0 {
                self.sort_split(p, less);
            }
            self.update_group(p + less, p + n - greater - 1);
            if greater == 0 {
                return;
            }
            p = p + n - greater;
            n = greater;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::suffix_sort;

    fn naive(text: &[u8]) -> Vec<u32> {
        let mut sa: Vec<u32> = (0..text.len() as u32).collect();
        sa.sort_by(|&a, &b| text[a as usize..].cmp(&text[b as usize..]));
        sa
    }

    #[test]
    fn small_cases() {
        for t in [
            &b""[..],
            b"a",
            b"ab",
            b"ba",
            b"aaaa",
            b"banana",
            b"mississippi",
            b"abcdeabcdfbcde",
            b"\xff\x00\xff\x00\x00",
        ] {
            assert_eq!(suffix_sort(t), naive(t), "{:?}", t);
        }
    }

    #[test]
    fn long_periodic() {
        let t: Vec<u8> = b"abaababaabaab"
            .iter()
            .cycle()
            .take(3000)
            .copied()
            .collect();
        assert_eq!(suffix_sort(&t), naive(&t));
        let u = vec![b'x'; 2000];
        assert_eq!(suffix_sort(&u), naive(&u));
    }
}
