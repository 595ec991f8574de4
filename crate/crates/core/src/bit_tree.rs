//! Predecessor/successor set over a fixed universe `[0, U)`.
//!
//! A complete binary tree of bits, stored as one bit array per level. Leaf
//! `x` is set iff `x` is a member; an internal node is set iff some leaf below
//! it is. The leaf level is padded to the next power of two so that parent,
//! child and neighbour moves are plain index arithmetic.
//!
//! Queries climb from the leaf next to `t`, keeping the current node entirely
//! on the requested side of `t`: a node whose parent would also cover `t`
//! steps sideways to its neighbour instead, so there is at most one sideways
//! move per upward move. The first set node found is then descended to its
//! extreme leaf on the side facing `t`.

/// Bits per storage word.
const WORD: usize = 64;

#[derive(Clone, Debug)]
pub struct BitTreeSet {
    universe: usize,
    /// `levels[0]` is the root, `levels[depth]` the leaves.
    levels: Vec<Vec<u64>>,
}

/// Query answer plus the number of tree nodes inspected to produce it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Traced {
    pub value: Option<usize>,
    pub visits: u32,
}

impl BitTreeSet {
    pub fn new(universe: usize) -> BitTreeSet {
        assert!(universe >= 1, "bit tree universe must be non-empty");
        let depth = ceil_log2(universe);
        let levels = (0..=depth)
            .map(|level| vec![0u64; (1usize << level).div_ceil(WORD)])
            .collect();
        BitTreeSet { universe, levels }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Number of levels, `ceil(log2(U)) + 1`.
    pub fn levels(&self) -> usize {
        self.levels.len()
    }

    /// Logical node count, `2P - 1` for `P` padded leaves.
    pub fn node_count(&self) -> usize {
        (1usize << self.levels.len()) - 1
    }

    /// Bytes held by the level arrays.
    pub fn heap_bytes(&self) -> usize {
        self.levels.iter().map(|l| l.len() * 8).sum::<usize>()
            + self.levels.capacity() * std::mem::size_of::<Vec<u64>>()
    }

    fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    #[inline]
    fn bit(&self, level: usize, node: usize) -> bool {
        self.levels[level][node / WORD] >> (node % WORD) & 1 == 1
    }

    #[inline]
    fn set_bit(&mut self, level: usize, node: usize) -> bool {
        let word = &mut self.levels[level][node / WORD];
        let mask = 1u64 << (node % WORD);
        let was = *word & mask != 0;
        *word |= mask;
        was
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.universe && self.bit(self.depth(), x)
    }

    pub fn insert(&mut self, x: usize) {
        assert!(
            x < self.universe,
            "{x} outside bit tree universe 0..{}",
            self.universe
        );
        let mut node = x;
        for level in (0..self.levels.len()).rev() {
            if self.set_bit(level, node) {
                // Ancestors of a set node are already set.
                break;
            }
            node >>= 1;
        }
    }

    pub fn max_less_than(&self, t: usize) -> Option<usize> {
        self.max_less_than_traced(t).value
    }

    pub fn min_greater_than(&self, t: usize) -> Option<usize> {
        self.min_greater_than_traced(t).value
    }

    pub fn max_less_than_traced(&self, t: usize) -> Traced {
        assert!(t < self.universe, "{t} outside bit tree universe");
        let mut visits = 0;
        if t == 0 {
            return Traced {
                value: None,
                visits,
            };
        }
        let mut level = self.depth();
        let mut node = t - 1;
        loop {
            visits += 1;
            if self.bit(level, node) {
                break;
            }
            if node & 1 == 0 {
                // A left child's parent would also cover `t`.
                if node == 0 {
                    return Traced {
                        value: None,
                        visits,
                    };
                }
                node -= 1;
            } else {
                node /= 2;
                level -= 1;
            }
        }
        while level < self.depth() {
            level += 1;
            visits += 1;
            node = if self.bit(level, 2 * node + 1) {
                2 * node + 1
            } else {
                2 * node
            };
        }
        Traced {
            value: Some(node),
            visits,
        }
    }

    pub fn min_greater_than_traced(&self, t: usize) -> Traced {
        assert!(t < self.universe, "{t} outside bit tree universe");
        let mut visits = 0;
        if t + 1 >= self.universe {
            return Traced {
                value: None,
                visits,
            };
        }
        let mut level = self.depth();
        let mut node = t + 1;
        loop {
            visits += 1;
            if self.bit(level, node) {
                break;
            }
            if node & 1 == 1 {
                if node + 1 == 1 << level {
                    return Traced {
                        value: None,
                        visits,
                    };
                }
                node += 1;
            } else {
                node /= 2;
                level -= 1;
            }
        }
        while level < self.depth() {
            level += 1;
            visits += 1;
            node = if self.bit(level, 2 * node) {
                2 * node
            } else {
                2 * node + 1
            };
        }
        Traced {
            value: Some(node),
            visits,
        }
    }

    /// Full audit: every internal bit equals the OR of its two children and
    /// no padding leaf is set.
    pub fn is_consistent(&self) -> bool {
        let depth = self.depth();
        for level in 0..depth {
            for node in 0..1usize << level {
                let or = self.bit(level + 1, 2 * node) || self.bit(level + 1, 2 * node + 1);
                if self.bit(level, node) != or {
                    return false;
                }
            }
        }
        (self.universe..1 << depth).all(|x| !self.bit(depth, x))
    }
}

fn ceil_log2(x: usize) -> usize {
    x.next_power_of_two().trailing_zeros() as usize
}
